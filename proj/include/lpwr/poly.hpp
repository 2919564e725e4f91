#ifndef LPWR_POLY_HPP
#define LPWR_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "lpwr/scalar.hpp"

namespace lpwr {

/// Dense univariate polynomial over the scalar field.  Coefficients are
/// stored by ascending power with no trailing zeros, so representations are
/// canonical and equality is structural.
class Polynomial {
public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<Scalar> coeffs);

  static Polynomial zero(Field f) { return Polynomial(f); }
  static Polynomial one(Field f) { return constant(f.one()); }
  static Polynomial constant(Scalar c);
  static Polynomial variable(Field f); // the monomial t

  const Field& field() const { return field_; }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  Scalar coeff(std::size_t i) const;
  Scalar eval0() const; // value at 0
  Scalar leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& s) const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  /// Monic gcd (zero if both arguments are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const;

private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

} // namespace lpwr

#endif
