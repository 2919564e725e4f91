#include "lpwr/leavitt.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lpwr {

int special_edge(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("special_edge: unknown vertex");
  const auto& outs = g.out_edges(v);
  if (outs.empty())
    throw std::invalid_argument("special_edge: '" + g.vertex_name(v) + "' is a sink");
  return outs.front(); // out-edges sorted by name
}

bool is_redex(const Graph& g, const Mono& m) {
  if (m.p.edges.empty() || m.q.edges.empty()) return false;
  int gp = m.p.edges.back();
  if (gp != m.q.edges.back()) return false;
  return gp == special_edge(g, g.edge(gp).src);
}

namespace {

std::vector<std::size_t> redex_sizes(const Graph& g, const CohnElement& x) {
  std::vector<std::size_t> sizes;
  for (const auto& [m, c] : x.terms())
    if (is_redex(g, m)) sizes.push_back(m.p.length() + m.q.length());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

// strict multiset (dominance) order on descending size lists
bool multiset_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

CohnElement rewrite_normal_form(CohnElement x, const RewriteOptions& opt,
                                const RewriteEmit& emit) {
  const Graph& g = *x.graph();
  std::mt19937_64 rng(opt.seed);
  for (;;) {
    std::vector<Mono> redexes;
    for (const auto& [m, c] : x.terms())
      if (is_redex(g, m)) redexes.push_back(m);
    if (redexes.empty()) return x;

    std::size_t idx = 0;
    switch (opt.pick) {
      case RewriteOptions::Pick::First: idx = 0; break;
      case RewriteOptions::Pick::Last: idx = redexes.size() - 1; break;
      case RewriteOptions::Pick::Random: idx = rng() % redexes.size(); break;
    }
    const Mono m = redexes[idx];
    const Scalar alpha = x.coeff(m);

    std::vector<std::size_t> before;
    if (opt.check_termination) before = redex_sizes(g, x);

    // strip the shared special edge
    int ge = m.p.edges.back();
    int v = g.edge(ge).src;
    Path p0 = m.p, q0 = m.q;
    p0.edges.pop_back();
    q0.edges.pop_back();

    x.add_term(m, -alpha);
    x.add_term(Mono{p0, q0}, alpha);
    for (int fe : g.out_edges(v)) {
      if (fe == ge) continue;
      x.add_term(Mono{path_append(g, p0, fe), path_append(g, q0, fe)}, -alpha);
    }
    if (emit) emit(v, p0, q0, alpha);

    if (opt.check_termination) {
      std::vector<std::size_t> after = redex_sizes(g, x);
      if (!multiset_less(after, before))
        throw std::logic_error("rewrite termination measure failed to decrease");
    }
  }
}

LeavittElement::LeavittElement(CohnElement x, const RewriteOptions& opt)
    : val_(rewrite_normal_form(std::move(x), opt)) {}

LeavittElement LeavittElement::zero(GraphPtr g, Field f) {
  return LeavittElement(CohnElement::zero(std::move(g), f));
}
LeavittElement LeavittElement::vertex(GraphPtr g, Field f, int v) {
  return LeavittElement(CohnElement::vertex(std::move(g), f, v));
}
LeavittElement LeavittElement::edge(GraphPtr g, Field f, int e) {
  return LeavittElement(CohnElement::edge(std::move(g), f, e));
}
LeavittElement LeavittElement::edge_star(GraphPtr g, Field f, int e) {
  return LeavittElement(CohnElement::edge_star(std::move(g), f, e));
}

LeavittElement LeavittElement::operator+(const LeavittElement& o) const {
  return LeavittElement(val_ + o.val_); // sum of normal forms is normal
}
LeavittElement LeavittElement::operator-(const LeavittElement& o) const {
  return LeavittElement(val_ - o.val_);
}
LeavittElement LeavittElement::operator-() const { return LeavittElement(-val_); }
LeavittElement LeavittElement::scaled(const Scalar& s) const {
  return LeavittElement(val_.scaled(s));
}
LeavittElement LeavittElement::graded_component(long n) const {
  return LeavittElement(val_.graded_component(n));
}

LeavittElement lpa_mul(const LeavittElement& x, const LeavittElement& y) {
  return LeavittElement(cohn_mul(x.cohn(), y.cohn()));
}

bool graded_simple(const Graph& g, int max_vertices) {
  auto subsets = enumerate_hsat(g, max_vertices);
  return subsets.size() == 2 ||
         (subsets.size() == 1 && g.vertex_count() == 0);
}

} // namespace lpwr
