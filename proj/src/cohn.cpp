#include "lpwr/cohn.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "lpwr/linalg.hpp"

namespace lpwr {

bool mono_less(const Graph& g, const Mono& a, const Mono& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (a.p.length() != b.p.length()) return a.p.length() < b.p.length();
  for (std::size_t i = 0; i < a.p.length(); ++i) {
    const std::string &na = g.edge(a.p.edges[i]).name, &nb = g.edge(b.p.edges[i]).name;
    if (na != nb) return na < nb;
  }
  for (std::size_t i = 0; i < a.q.length(); ++i) {
    const std::string &na = g.edge(a.q.edges[i]).name, &nb = g.edge(b.q.edges[i]).name;
    if (na != nb) return na < nb;
  }
  if (a.p.src != b.p.src) return a.p.src < b.p.src;
  return a.q.src < b.q.src;
}

SGElement sg_make(const Graph& g, Path p, Path q) {
  if (!path_valid(g, p) || !path_valid(g, q))
    throw std::invalid_argument("sg_make: invalid path");
  if (path_range(g, p) != path_range(g, q))
    throw std::invalid_argument("sg_make: r(p) != r(q)");
  return SGElement::of(Mono{std::move(p), std::move(q)});
}

SGElement sg_mul(const Graph& g, const SGElement& x, const SGElement& y) {
  if (x.is_zero() || y.is_zero()) return SGElement::zero();
  const Mono& a = *x.m;
  const Mono& b = *y.m;
  // (p q*)(r s*): q against r
  if (path_is_prefix(a.q, b.p)) {
    Path rest = path_strip_prefix(g, a.q, b.p);
    return SGElement::of(Mono{path_concat(g, a.p, rest), b.q});
  }
  if (path_is_prefix(b.p, a.q)) {
    Path rest = path_strip_prefix(g, b.p, a.q);
    return SGElement::of(Mono{a.p, path_concat(g, b.q, rest)});
  }
  return SGElement::zero();
}

SGElement sg_star(const SGElement& x) {
  if (x.is_zero()) return x;
  return SGElement::of(Mono{x.m->q, x.m->p});
}

namespace {

std::string mono_str(const Graph& g, const Mono& m) {
  if (m.p.edges.empty() && m.q.edges.empty()) return g.vertex_name(m.p.src);
  std::string out;
  bool first = true;
  for (int e : m.p.edges) {
    if (!first) out += ".";
    out += g.edge(e).name;
    first = false;
  }
  for (auto it = m.q.edges.rbegin(); it != m.q.edges.rend(); ++it) {
    if (!first) out += ".";
    out += g.edge(*it).name + "^*";
    first = false;
  }
  return out;
}

} // namespace

std::string sg_str(const Graph& g, const SGElement& x) {
  return x.is_zero() ? "0" : mono_str(g, *x.m);
}

CohnElement::CohnElement(GraphPtr g, Field f)
    : graph_(std::move(g)), field_(f), terms_(MonoCmp{graph_.get()}) {
  if (!graph_) throw std::invalid_argument("CohnElement: null graph");
}

CohnElement CohnElement::vertex(GraphPtr g, Field f, int v) {
  CohnElement e(g, f);
  Path at = Path::at(v);
  e.add_term(Mono{at, at}, f.one());
  return e;
}

CohnElement CohnElement::edge(GraphPtr g, Field f, int ei) {
  CohnElement e(g, f);
  Path p{g->edge(ei).src, {ei}};
  e.add_term(Mono{p, Path::at(g->edge(ei).rng)}, f.one());
  return e;
}

CohnElement CohnElement::edge_star(GraphPtr g, Field f, int ei) {
  CohnElement e(g, f);
  Path p{g->edge(ei).src, {ei}};
  e.add_term(Mono{Path::at(g->edge(ei).rng), p}, f.one());
  return e;
}

CohnElement CohnElement::monomial(GraphPtr g, Field f, Mono m, Scalar c) {
  CohnElement e(g, f);
  if (path_range(*g, m.p) != path_range(*g, m.q))
    throw std::invalid_argument("monomial: r(p) != r(q)");
  e.add_term(m, c);
  return e;
}

void CohnElement::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar CohnElement::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

namespace {

void check_same_context(const CohnElement& a, const CohnElement& b) {
  if (a.graph() != b.graph())
    throw std::invalid_argument("Cohn elements over different graphs");
  if (a.field() != b.field())
    throw std::invalid_argument("Cohn elements over different fields");
}

} // namespace

CohnElement CohnElement::operator+(const CohnElement& o) const {
  check_same_context(*this, o);
  CohnElement r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

CohnElement CohnElement::operator-(const CohnElement& o) const {
  return *this + (-o);
}

CohnElement CohnElement::operator-() const {
  CohnElement r(graph_, field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CohnElement CohnElement::scaled(const Scalar& s) const {
  CohnElement r(graph_, field_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

bool CohnElement::operator==(const CohnElement& o) const {
  check_same_context(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

CohnElement CohnElement::graded_component(long n) const {
  CohnElement r(graph_, field_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == n) r.terms_.emplace(m, c);
  return r;
}

std::string CohnElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    if (first) {
      if (coeff.is_negative()) {
        out += "-";
        coeff = -coeff;
      }
    } else if (coeff.is_negative()) {
      out += " - ";
      coeff = -coeff;
    } else {
      out += " + ";
    }
    first = false;
    if (!coeff.is_one()) out += coeff.str() + "*";
    out += mono_str(*graph_, m);
  }
  return out;
}

CohnElement cohn_mul(const CohnElement& x, const CohnElement& y) {
  check_same_context(x, y);
  CohnElement r(x.graph(), x.field());
  const Graph& g = *x.graph();
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms()) {
      SGElement p = sg_mul(g, SGElement::of(ma), SGElement::of(mb));
      if (!p.is_zero()) r.add_term(*p.m, ca * cb);
    }
  return r;
}

CohnElement star(const CohnElement& x) {
  CohnElement r(x.graph(), x.field());
  for (const auto& [m, c] : x.terms()) r.add_term(Mono{m.q, m.p}, c);
  return r;
}

CohnElement ck_prime(GraphPtr g, Field f, int v) {
  if (v < 0 || v >= g->vertex_count())
    throw std::invalid_argument("ck_prime: unknown vertex");
  if (g->is_sink(v))
    throw std::invalid_argument("no CK element at sink '" + g->vertex_name(v) + "'");
  CohnElement r = CohnElement::vertex(g, f, v);
  for (int e : g->out_edges(v)) {
    Path fe{v, {e}};
    r.add_term(Mono{fe, fe}, -f.one());
  }
  return r;
}

bool lemma5_verify(GraphPtr g, Field f, const std::vector<Lemma5Family>& families) {
  // hypothesis validation
  std::set<int> vs;
  for (const auto& fam : families) {
    if (fam.vertex < 0 || fam.vertex >= g->vertex_count())
      throw std::invalid_argument("lemma5: unknown vertex");
    if (g->is_sink(fam.vertex))
      throw std::invalid_argument("lemma5: vertex is a sink");
    if (!vs.insert(fam.vertex).second)
      throw std::invalid_argument("lemma5: vertices must be distinct");
    auto require = [&](const Path& p) {
      if (!path_valid(*g, p) || p.length() < 1)
        throw std::invalid_argument("lemma5: paths must be valid of length >= 1");
      if (path_range(*g, p) != fam.vertex)
        throw std::invalid_argument("lemma5: path range must be the family vertex");
    };
    std::set<std::vector<int>> seen_pairs;
    for (const auto& [p, q] : fam.pq) {
      require(p);
      require(q);
      std::vector<int> key = p.edges;
      key.push_back(-1);
      key.insert(key.end(), q.edges.begin(), q.edges.end());
      if (!seen_pairs.insert(key).second)
        throw std::invalid_argument("lemma5: duplicate (p,q) pair");
    }
    std::set<std::vector<int>> seen_p, seen_q;
    for (const auto& p : fam.p_left) {
      require(p);
      if (!seen_p.insert(p.edges).second)
        throw std::invalid_argument("lemma5: duplicate p' path");
    }
    for (const auto& q : fam.q_right) {
      require(q);
      if (!seen_q.insert(q.edges).second)
        throw std::invalid_argument("lemma5: duplicate q' path");
    }
  }

  // expand each term in the S-basis and rank the coefficient matrix
  std::vector<CohnElement> cols;
  for (const auto& fam : families) {
    CohnElement ck = ck_prime(g, f, fam.vertex);
    for (const auto& [p, q] : fam.pq) {
      CohnElement pe = CohnElement::monomial(g, f, Mono{p, Path::at(fam.vertex)}, f.one());
      CohnElement qe = CohnElement::monomial(g, f, Mono{Path::at(fam.vertex), q}, f.one());
      cols.push_back(cohn_mul(cohn_mul(pe, ck), qe));
    }
    for (const auto& p : fam.p_left) {
      CohnElement pe = CohnElement::monomial(g, f, Mono{p, Path::at(fam.vertex)}, f.one());
      cols.push_back(cohn_mul(pe, ck));
    }
    for (const auto& q : fam.q_right) {
      CohnElement qe = CohnElement::monomial(g, f, Mono{Path::at(fam.vertex), q}, f.one());
      cols.push_back(cohn_mul(ck, qe));
    }
    if (fam.include_plain) cols.push_back(ck);
  }
  if (cols.empty()) return true; // vacuously independent

  std::vector<CoordVec<Scalar>> vecs;
  for (const auto& col : cols) {
    CoordVec<Scalar> v;
    for (const auto& [m, c] : col.terms()) v.emplace(mono_str(*g, m), c);
    vecs.push_back(std::move(v));
  }
  return coord_rank(vecs, f.zero()) == cols.size();
}

} // namespace lpwr
