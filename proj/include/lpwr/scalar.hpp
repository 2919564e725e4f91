#ifndef LPWR_SCALAR_HPP
#define LPWR_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lpwr {

/// The ground field of every algebra in this library: the rationals by
/// default, or a prime field GF(p) selected at runtime.  All arithmetic is
/// exact; there is no floating point anywhere in the computation path.
class Field {
public:
  static Field rationals();
  static Field gf(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  /// Characteristic; 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }

  class Scalar zero() const;
  class Scalar one() const;
  class Scalar integer(long n) const;
  /// n/d as a field element.  d must be nonzero (and invertible mod p).
  class Scalar fraction(long n, long d) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0; // 0 = rationals
};

/// An exact field element.  Rational values are arbitrary-precision GMP
/// rationals; GF(p) values are canonical residues in [0, p).
class Scalar {
public:
  Scalar() = default; // rational zero

  static Scalar rational(long n, long d = 1);
  static Scalar rational(mpq_class q);
  static Scalar residue(std::uint64_t v, std::uint64_t p);

  bool is_rational() const { return mod_ == 0; }
  std::uint64_t modulus() const { return mod_; }
  Field field() const;

  bool is_zero() const;
  bool is_one() const;
  /// True for rationals with negative sign; always false in GF(p).
  bool is_negative() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const { return val_; }

  std::string str() const;

private:
  void check_compatible(const Scalar& o) const;

  mpq_class rat_;          // rational payload (mod_ == 0)
  std::uint64_t val_ = 0;  // GF(p) payload
  std::uint64_t mod_ = 0;  // 0 = rational
};

} // namespace lpwr

#endif
