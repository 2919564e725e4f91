#ifndef LPWR_RATFUN_HPP
#define LPWR_RATFUN_HPP

#include <string>

#include "lpwr/poly.hpp"

namespace lpwr {

/// One-variable rational function f/g in canonical form: gcd(f,g) = 1 and,
/// whenever g(0) != 0, g is scaled so that g(0) = 1 (otherwise g is monic).
/// Canonical representations make equality structural; cross_equal gives the
/// independent cross-multiplication check used by the property tests.
class RationalFunction {
public:
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero(Field f);
  static RationalFunction one(Field f);
  static RationalFunction variable(Field f); // t

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction scaled(const Scalar& s) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  RationalFunction inverse() const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }
  /// f1*g2 == f2*g1, computed without canonicalization.
  static bool cross_equal(const RationalFunction& a, const RationalFunction& b);

  std::string str() const;

private:
  Polynomial num_, den_;
};

/// Membership in A0 = { f/g : f(0) = 0, g(0) = 1 }.
bool a0_membership(const RationalFunction& r);

/// For x in A0 returns the quasi-inverse y = -f/(g+f), the unique solution of
/// x + y + x*y = 0; y is again in A0.
RationalFunction a0_quasi_inverse(const RationalFunction& x);

/// Deterministic enumeration of the rationals: 0, 1, -1, 2, -2, 1/2, ...
Scalar nth_rational(std::size_t n);

/// Deterministic enumeration of polynomials g with g(0) = 1 (g_0 = 1);
/// every such polynomial with rational coefficients appears at least once.
Polynomial nth_unit_polynomial(std::size_t n, Field f);

/// The generator sequence a_i = t / g_i of A0.
RationalFunction nth_a0_generator(std::size_t n, Field f);

} // namespace lpwr

#endif
