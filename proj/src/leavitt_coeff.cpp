#include "lpwr/leavitt_coeff.hpp"

#include "lpwr/sampling.hpp"

namespace lpwr {

LeavittCoeff::LeavittCoeff(GraphPtr g, Field f) : g_(std::move(g)), f_(f) {
  if (!g_ || g_->vertex_count() == 0)
    throw std::invalid_argument("LeavittCoeff: empty graph has no unit");
}

AlgElem LeavittCoeff::zero() const { return wrap(LeavittElement::zero(g_, f_)); }

AlgElem LeavittCoeff::one() const {
  CohnElement sum = CohnElement::zero(g_, f_);
  for (int v = 0; v < g_->vertex_count(); ++v) {
    Path at = Path::at(v);
    sum.add_term(Mono{at, at}, f_.one());
  }
  return wrap(LeavittElement(std::move(sum)));
}

AlgElem LeavittCoeff::add(const AlgElem& a, const AlgElem& b) const {
  return wrap(value(a) + value(b));
}
AlgElem LeavittCoeff::negate(const AlgElem& a) const { return wrap(-value(a)); }
AlgElem LeavittCoeff::mul(const AlgElem& a, const AlgElem& b) const {
  return wrap(lpa_mul(value(a), value(b)));
}
AlgElem LeavittCoeff::scale(const Scalar& s, const AlgElem& a) const {
  return wrap(value(a).scaled(s));
}
bool LeavittCoeff::is_zero(const AlgElem& a) const { return value(a).is_zero(); }
std::string LeavittCoeff::str(const AlgElem& a) const { return value(a).str(); }

std::vector<std::string> LeavittCoeff::idempotent_names() const {
  std::vector<std::string> names;
  for (int v = 0; v < g_->vertex_count(); ++v) names.push_back(g_->vertex_name(v));
  return names;
}

AlgElem LeavittCoeff::idempotent(const std::string& name) const {
  return wrap(LeavittElement::vertex(g_, f_, g_->vertex(name)));
}

std::size_t LeavittCoeff::generator_count() const {
  return static_cast<std::size_t>(g_->vertex_count()) +
         2 * static_cast<std::size_t>(g_->edge_count());
}

AlgElem LeavittCoeff::generator(std::size_t i) const {
  std::size_t nv = static_cast<std::size_t>(g_->vertex_count());
  std::size_t ne = static_cast<std::size_t>(g_->edge_count());
  if (i < nv) return wrap(LeavittElement::vertex(g_, f_, static_cast<int>(i)));
  i -= nv;
  if (i < ne) return wrap(LeavittElement::edge(g_, f_, static_cast<int>(i)));
  i -= ne;
  if (i < ne) return wrap(LeavittElement::edge_star(g_, f_, static_cast<int>(i)));
  throw std::out_of_range("LeavittCoeff: generator index out of range");
}

AlgElem LeavittCoeff::symbol(const std::string& sym, bool star) const {
  int v = g_->find_vertex(sym);
  if (v >= 0) {
    if (star) throw std::invalid_argument("cannot star a vertex");
    return wrap(LeavittElement::vertex(g_, f_, v));
  }
  int e = g_->find_edge(sym);
  if (e >= 0)
    return wrap(star ? LeavittElement::edge_star(g_, f_, e)
                     : LeavittElement::edge(g_, f_, e));
  return CoeffAlgebra::symbol(sym, star);
}

AlgElem LeavittCoeff::sample(std::mt19937_64& rng) const {
  return wrap(LeavittElement(sample_cohn(g_, f_, rng, 2, 2)));
}

std::vector<std::pair<std::string, Scalar>>
LeavittCoeff::coords(const AlgElem& a) const {
  std::vector<std::pair<std::string, Scalar>> out;
  for (const auto& [m, c] : value(a).cohn().terms())
    out.emplace_back(path_str(*g_, m.p) + "|" + path_str(*g_, m.q), c);
  return out;
}

} // namespace lpwr
