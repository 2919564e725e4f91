#ifndef LPWR_LEAVITT_COEFF_HPP
#define LPWR_LEAVITT_COEFF_HPP

#include "lpwr/coeff.hpp"
#include "lpwr/leavitt.hpp"

namespace lpwr {

/// A Leavitt path algebra L(Gamma) of a finite graph as a coefficient
/// algebra.  The designated idempotent family is the (pairwise orthogonal)
/// vertex set; the unit is the sum of all vertices.  Used as A = L(Gamma(W))
/// in the decomposition L(Gamma) = L(Gamma(W)) wr L(Gamma/W).
class LeavittCoeff final : public CoeffAlgebra {
public:
  LeavittCoeff(GraphPtr g, Field f);

  const GraphPtr& graph() const { return g_; }

  static AlgElem wrap(LeavittElement x) { return AlgElem::of(std::move(x)); }
  const LeavittElement& value(const AlgElem& a) const { return a.as<LeavittElement>(); }

  std::string name() const override { return "L(graph)"; }
  Field field() const override { return f_; }
  AlgElem zero() const override;
  AlgElem one() const override;
  AlgElem add(const AlgElem& a, const AlgElem& b) const override;
  AlgElem negate(const AlgElem& a) const override;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const override;
  AlgElem scale(const Scalar& s, const AlgElem& a) const override;
  bool is_zero(const AlgElem& a) const override;
  std::string str(const AlgElem& a) const override;
  std::vector<std::string> idempotent_names() const override;
  AlgElem idempotent(const std::string& name) const override;
  std::size_t generator_count() const override;
  AlgElem generator(std::size_t i) const override;
  AlgElem symbol(const std::string& sym, bool star) const override;
  AlgElem sample(std::mt19937_64& rng) const override;
  bool has_coords() const override { return true; }
  std::vector<std::pair<std::string, Scalar>> coords(const AlgElem& a) const override;

private:
  GraphPtr g_;
  Field f_;
};

} // namespace lpwr

#endif
