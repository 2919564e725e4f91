#include "lpwr/extgraph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace lpwr {

ExtendedGraph::ExtendedGraph(GraphPtr base, CoeffAlgebraPtr coeff,
                             const std::vector<BridgeSpec>& bridges)
    : base_(std::move(base)), coeff_(std::move(coeff)), field_(coeff_->field()) {
  if (!base_ || !coeff_) throw std::invalid_argument("extend_graph: null input");
  auto idems = coeff_->idempotent_names();
  out_.assign(static_cast<std::size_t>(base_->vertex_count()), {});
  std::set<std::string> names;
  for (const auto& spec : bridges) {
    if (base_->find_vertex(spec.name) >= 0 || base_->find_edge(spec.name) >= 0 ||
        !names.insert(spec.name).second)
      throw std::invalid_argument("duplicate bridge id '" + spec.name + "'");
    int src = base_->vertex(spec.src_vertex);
    if (base_->is_sink(src))
      throw std::invalid_argument("bridge '" + spec.name + "' at sink '" +
                                  spec.src_vertex + "'");
    if (std::find(idems.begin(), idems.end(), spec.idem_name) == idems.end())
      throw std::invalid_argument("unknown idempotent '" + spec.idem_name + "'");
    int id = bridge_count();
    bridges_.push_back(Bridge{spec.name, src, spec.idem_name});
    ranges_.push_back(coeff_->idempotent(spec.idem_name));
    out_[static_cast<std::size_t>(src)].push_back(id);
  }
  for (auto& outs : out_)
    std::sort(outs.begin(), outs.end(), [this](int a, int b) {
      return bridges_[static_cast<std::size_t>(a)].name <
             bridges_[static_cast<std::size_t>(b)].name;
    });
}

std::vector<BridgeSpec> ExtendedGraph::parse_extension(std::string_view text) {
  std::vector<BridgeSpec> specs;
  std::set<std::string> idems;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
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
    if (toks.empty()) continue;
    if (toks[0] == "idem" && toks.size() == 2) {
      idems.insert(toks[1]);
    } else if (toks[0] == "bridge" && toks.size() == 4) {
      if (!idems.count(toks[3]))
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": undeclared idempotent '" + toks[3] + "'");
      specs.push_back(BridgeSpec{toks[1], toks[2], toks[3]});
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'idem <name>' or 'bridge <id> <vertex> <idem>'");
    }
  }
  return specs;
}

int ExtendedGraph::find_bridge(std::string_view name) const {
  for (int b = 0; b < bridge_count(); ++b)
    if (bridges_[static_cast<std::size_t>(b)].name == name) return b;
  return -1;
}

ExtendedGraphPtr extend_graph(GraphPtr base, CoeffAlgebraPtr coeff,
                              const std::vector<BridgeSpec>& bridges) {
  return std::make_shared<const ExtendedGraph>(std::move(base), std::move(coeff), bridges);
}

BridgePath make_bridge_path(const ExtendedGraph& eg, Path prefix, int bridge) {
  BridgePath x{std::move(prefix), bridge};
  if (!bridge_path_valid(eg, x))
    throw std::invalid_argument("invalid bridge path");
  return x;
}

bool bridge_path_valid(const ExtendedGraph& eg, const BridgePath& x) {
  if (x.is_x0()) return true;
  if (x.bridge >= eg.bridge_count()) return false;
  if (!path_valid(*eg.base(), x.prefix)) return false;
  return path_range(*eg.base(), x.prefix) == eg.bridge(x.bridge).src;
}

bool bridge_path_less(const ExtendedGraph& eg, const BridgePath& a, const BridgePath& b) {
  if (a.is_x0() || b.is_x0()) return a.is_x0() && !b.is_x0();
  if (a.length() != b.length()) return a.length() < b.length();
  const Graph& g = *eg.base();
  for (std::size_t i = 0; i < a.prefix.length(); ++i) {
    const std::string &na = g.edge(a.prefix.edges[i]).name,
                      &nb = g.edge(b.prefix.edges[i]).name;
    if (na != nb) return na < nb;
  }
  const std::string &ba = eg.bridge(a.bridge).name, &bb = eg.bridge(b.bridge).name;
  if (ba != bb) return ba < bb;
  return a.prefix.src < b.prefix.src;
}

std::string bridge_path_str(const ExtendedGraph& eg, const BridgePath& x) {
  if (x.is_x0()) return "0";
  std::string out;
  for (int e : x.prefix.edges) out += eg.base()->edge(e).name + ".";
  return out + eg.bridge(x.bridge).name;
}

AlgElem bridge_path_range(const ExtendedGraph& eg, const BridgePath& x) {
  if (x.is_x0()) return eg.coeff()->one(); // r(0) = 1
  return eg.bridge_range(x.bridge);
}

std::vector<BridgePath> enumerate_bridge_paths(const ExtendedGraph& eg, int max_len) {
  if (max_len < 1)
    throw std::invalid_argument("enumerate_bridge_paths: max_len must be >= 1");
  std::vector<BridgePath> out{BridgePath::x0()};
  for (const auto& p : enumerate_paths(*eg.base(), max_len - 1))
    for (int b : eg.out_bridges(path_range(*eg.base(), p)))
      out.push_back(BridgePath{p, b});
  std::sort(out.begin(), out.end(), [&](const BridgePath& a, const BridgePath& b) {
    return bridge_path_less(eg, a, b);
  });
  return out;
}

BridgePath act(const ExtendedGraph& eg, const SGElement& s, const BridgePath& x, Side side) {
  if (s.is_zero() || x.is_x0()) return BridgePath::x0();
  const Graph& g = *eg.base();
  Mono m = side == Side::Left ? *s.m : Mono{s.m->q, s.m->p}; // x.s = s* x
  // (p q*) . (pi e) = p pi1 e when pi = q pi1, else x0
  if (!path_is_prefix(m.q, x.prefix)) return BridgePath::x0();
  Path rest = path_strip_prefix(g, m.q, x.prefix);
  BridgePath r{path_concat(g, m.p, rest), x.bridge};
  assert(bridge_path_valid(eg, r));
  return r;
}

} // namespace lpwr
