#include "lpwr/scalar.hpp"

namespace lpwr {
namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

// extended Euclid; a must be nonzero mod p
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p),
               new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::rationals() { return Field(0); }

Field Field::gf(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("GF(p): p must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("GF(p): p must be prime");
  return Field(p);
}

Scalar Field::zero() const { return integer(0); }
Scalar Field::one() const { return integer(1); }

Scalar Field::integer(long n) const {
  if (p_ == 0) return Scalar::rational(n);
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::fraction(long n, long d) const {
  if (d == 0) throw std::domain_error("fraction: zero denominator");
  if (p_ == 0) return Scalar::rational(n, d);
  return integer(n) * integer(d).inverse();
}

std::string Field::str() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::rational(long n, long d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  Scalar s;
  s.rat_ = mpq_class(n, d);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.rat_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
  Scalar s;
  s.mod_ = p;
  s.val_ = v % p;
  return s;
}

Field Scalar::field() const {
  return mod_ == 0 ? Field::rationals() : Field::gf(mod_);
}

bool Scalar::is_zero() const {
  return mod_ == 0 ? rat_ == 0 : val_ == 0;
}

bool Scalar::is_one() const {
  return mod_ == 0 ? rat_ == 1 : val_ == 1;
}

bool Scalar::is_negative() const {
  return mod_ == 0 && sgn(rat_) < 0;
}

void Scalar::check_compatible(const Scalar& o) const {
  if (mod_ != o.mod_)
    throw std::invalid_argument("scalar arithmetic across different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_compatible(o);
  if (mod_ == 0) return rational(rat_ + o.rat_);
  std::uint64_t v = val_ + o.val_;
  if (v >= mod_) v -= mod_;
  return residue(v, mod_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_compatible(o);
  if (mod_ == 0) return rational(rat_ * o.rat_);
  return residue(mulmod(val_, o.val_, mod_), mod_);
}

Scalar Scalar::operator-() const {
  if (mod_ == 0) return rational(-rat_);
  return residue(val_ == 0 ? 0 : mod_ - val_, mod_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (mod_ == 0) return rational(1 / rat_);
  return residue(invmod(val_, mod_), mod_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (mod_ != o.mod_) return false;
  return mod_ == 0 ? rat_ == o.rat_ : val_ == o.val_;
}

const mpq_class& Scalar::rational_value() const {
  if (mod_ != 0) throw std::logic_error("rational_value on GF(p) scalar");
  return rat_;
}

std::string Scalar::str() const {
  if (mod_ == 0) return rat_.get_str();
  return std::to_string(val_);
}

} // namespace lpwr
