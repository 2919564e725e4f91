#include "lpwr/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace lpwr {

namespace {

std::vector<std::string> tokenize_line(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

[[noreturn]] void parse_fail(int lineno, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
}

} // namespace

Graph Graph::parse(std::string_view text) {
  Graph g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "vertex" && toks.size() == 2) {
        g.add_vertex(toks[1]);
      } else if (toks[0] == "edge" && toks.size() == 4) {
        int s = g.find_vertex(toks[2]);
        if (s < 0) parse_fail(lineno, "unknown endpoint '" + toks[2] + "'");
        int r = g.find_vertex(toks[3]);
        if (r < 0) parse_fail(lineno, "unknown endpoint '" + toks[3] + "'");
        g.add_edge(toks[1], s, r);
      } else {
        parse_fail(lineno, "expected 'vertex <id>' or 'edge <id> <src> <rng>'");
      }
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      parse_fail(lineno, what);
    }
  }
  return g;
}

int Graph::add_vertex(const std::string& name) {
  if (vindex_.count(name) || eindex_.count(name))
    throw std::invalid_argument("duplicate identifier '" + name + "'");
  int id = vertex_count();
  vnames_.push_back(name);
  vindex_.emplace(name, id);
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

int Graph::add_edge(const std::string& name, int src, int rng) {
  if (vindex_.count(name) || eindex_.count(name))
    throw std::invalid_argument("duplicate identifier '" + name + "'");
  if (src < 0 || src >= vertex_count() || rng < 0 || rng >= vertex_count())
    throw std::invalid_argument("edge '" + name + "' has an unknown endpoint");
  int id = edge_count();
  edges_.push_back(Edge{name, src, rng});
  eindex_.emplace(name, id);
  auto& outs = out_[static_cast<std::size_t>(src)];
  outs.push_back(id);
  std::sort(outs.begin(), outs.end(), [this](int a, int b) {
    return edges_[static_cast<std::size_t>(a)].name < edges_[static_cast<std::size_t>(b)].name;
  });
  in_[static_cast<std::size_t>(rng)].push_back(id);
  return id;
}

int Graph::find_vertex(std::string_view name) const {
  auto it = vindex_.find(name);
  return it == vindex_.end() ? -1 : it->second;
}

int Graph::find_edge(std::string_view name) const {
  auto it = eindex_.find(name);
  return it == eindex_.end() ? -1 : it->second;
}

int Graph::vertex(std::string_view name) const {
  int v = find_vertex(name);
  if (v < 0) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return v;
}

int Graph::edge_by_name(std::string_view name) const {
  int e = find_edge(name);
  if (e < 0) throw std::invalid_argument("unknown edge '" + std::string(name) + "'");
  return e;
}

VertexSet Graph::all_vertices() const {
  VertexSet w(static_cast<std::size_t>(vertex_count()));
  for (int v = 0; v < vertex_count(); ++v) w[static_cast<std::size_t>(v)] = v;
  return w;
}

VertexSet Graph::parse_vertex_set(std::string_view csv) const {
  VertexSet w;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    w.push_back(vertex(cur));
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',') {
      flush();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  flush();
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

std::string Graph::set_str(const VertexSet& w) const {
  std::vector<std::string> names;
  for (int v : w) names.push_back(vertex_name(v));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

bool Graph::operator==(const Graph& o) const {
  if (vnames_ != o.vnames_ || edges_.size() != o.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].name != o.edges_[i].name || edges_[i].src != o.edges_[i].src ||
        edges_[i].rng != o.edges_[i].rng)
      return false;
  }
  return true;
}

// -------------------------------------------------------------------- paths

int path_range(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.src : g.edge(p.edges.back()).rng;
}

bool path_valid(const Graph& g, const Path& p) {
  if (p.src < 0 || p.src >= g.vertex_count()) return false;
  int at = p.src;
  for (int e : p.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (g.edge(e).src != at) return false;
    at = g.edge(e).rng;
  }
  return true;
}

bool path_is_prefix(const Path& a, const Path& b) {
  if (a.src != b.src || a.edges.size() > b.edges.size()) return false;
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

Path path_strip_prefix(const Graph& g, const Path& a, const Path& b) {
  assert(path_is_prefix(a, b));
  Path r;
  r.src = path_range(g, a);
  r.edges.assign(b.edges.begin() + static_cast<long>(a.edges.size()), b.edges.end());
  return r;
}

Path path_concat(const Graph& g, const Path& a, const Path& b) {
  if (path_range(g, a) != b.src)
    throw std::invalid_argument("path concatenation: range/source mismatch");
  Path r = a;
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  return r;
}

Path path_append(const Graph& g, const Path& a, int edge) {
  if (g.edge(edge).src != path_range(g, a))
    throw std::invalid_argument("path append: range/source mismatch");
  Path r = a;
  r.edges.push_back(edge);
  return r;
}

std::string path_str(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_name(p.src);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ".";
    out += g.edge(p.edges[i]).name;
  }
  return out;
}

bool path_less(const Graph& g, const Path& a, const Path& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const std::string &na = g.edge(a.edges[i]).name, &nb = g.edge(b.edges[i]).name;
    if (na != nb) return na < nb;
  }
  return a.src < b.src;
}

// ---------------------------------------------------- hereditary / saturated

namespace {

void check_subset(const Graph& g, const VertexSet& w) {
  for (int v : w)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex subset contains an unknown vertex");
}

bool contains(const VertexSet& w, int v) {
  return std::binary_search(w.begin(), w.end(), v);
}

} // namespace

HsatResult hereditary_saturated_check(const Graph& g, const VertexSet& w) {
  check_subset(g, w);
  bool hereditary = true;
  for (int v : w)
    for (int e : g.out_edges(v))
      if (!contains(w, g.edge(e).rng)) hereditary = false;
  bool saturated = true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v) || contains(w, v)) continue;
    bool all_in = true;
    for (int e : g.out_edges(v))
      if (!contains(w, g.edge(e).rng)) all_in = false;
    if (all_in) saturated = false;
  }
  return {hereditary, saturated};
}

VertexSet hsat_closure(const Graph& g, const VertexSet& w) {
  check_subset(g, w);
  VertexSet cur = w;
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (;;) {
    bool changed = false;
    // downstream closure
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (int e : g.out_edges(cur[i])) {
        int r = g.edge(e).rng;
        if (!contains(cur, r)) {
          cur.insert(std::lower_bound(cur.begin(), cur.end(), r), r);
          changed = true;
        }
      }
    // saturation
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v) || contains(cur, v)) continue;
      bool all_in = true;
      for (int e : g.out_edges(v))
        if (!contains(cur, g.edge(e).rng)) all_in = false;
      if (all_in) {
        cur.insert(std::lower_bound(cur.begin(), cur.end(), v), v);
        changed = true;
      }
    }
    if (!changed) return cur;
  }
}

std::vector<VertexSet> enumerate_hsat(const Graph& g, int max_vertices) {
  int n = g.vertex_count();
  if (n > max_vertices)
    throw std::invalid_argument("enumerate_hsat: vertex count exceeds bound of " +
                                std::to_string(max_vertices));
  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet w;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) w.push_back(v);
    auto r = hereditary_saturated_check(g, w);
    if (r.hereditary && r.saturated) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [&](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return g.set_str(a) < g.set_str(b);
  });
  return out;
}

Graph restrict_graph(const Graph& g, const VertexSet& w) {
  check_subset(g, w);
  Graph r;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (contains(w, v)) r.add_vertex(g.vertex_name(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (contains(w, ed.src) && contains(w, ed.rng))
      r.add_edge(ed.name, r.vertex(g.vertex_name(ed.src)), r.vertex(g.vertex_name(ed.rng)));
  }
  return r;
}

Graph quotient_graph(const Graph& g, const VertexSet& w) {
  auto hs = hereditary_saturated_check(g, w);
  if (!hs.hereditary || !hs.saturated)
    throw std::invalid_argument("quotient graph requires a hereditary saturated subset");
  Graph r;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!contains(w, v)) r.add_vertex(g.vertex_name(v));
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (contains(w, ed.rng)) continue; // E(V, W) is dropped
    r.add_edge(ed.name, r.vertex(g.vertex_name(ed.src)), r.vertex(g.vertex_name(ed.rng)));
  }
  return r;
}

bool is_balloon(const Graph& g, int v, const VertexSet& w) {
  check_subset(g, w);
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("is_balloon: unknown vertex");
  if (contains(w, v)) return false; // (1)
  std::vector<int> loops;
  for (int e : g.out_edges(v))
    if (g.edge(e).rng == v) loops.push_back(e);
  if (loops.size() != 1) return false; // (2)
  int loop = loops[0];
  bool into_w = false;
  for (int e : g.out_edges(v)) {
    if (e == loop) continue;
    if (!contains(w, g.edge(e).rng)) return false; // (4)
    into_w = true;
  }
  if (!into_w) return false; // (3): E(v, W) nonempty
  for (int e : g.in_edges(v))
    if (e != loop) return false; // (5): E(V, v) = {loop}
  return true;
}

std::vector<Path> enumerate_paths(const Graph& g, int max_len) {
  if (max_len < 0) throw std::invalid_argument("enumerate_paths: negative bound");
  std::vector<Path> out, frontier;
  for (int v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::at(v));
  for (int len = 0; len <= max_len; ++len) {
    std::sort(frontier.begin(), frontier.end(),
              [&](const Path& a, const Path& b) { return path_less(g, a, b); });
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int e : g.out_edges(path_range(g, p))) next.push_back(path_append(g, p, e));
    frontier = std::move(next);
  }
  return out;
}

} // namespace lpwr
