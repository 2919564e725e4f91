#include "lpwr/ratfun.hpp"

#include <stdexcept>

namespace lpwr {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
  Polynomial g = Polynomial::gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Scalar d0 = den_.eval0();
  Scalar unit = d0.is_zero() ? den_.leading() : d0;
  Scalar inv = unit.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

RationalFunction RationalFunction::zero(Field f) {
  return RationalFunction(Polynomial::zero(f), Polynomial::one(f));
}

RationalFunction RationalFunction::one(Field f) {
  return RationalFunction(Polynomial::one(f), Polynomial::one(f));
}

RationalFunction RationalFunction::variable(Field f) {
  return RationalFunction(Polynomial::variable(f), Polynomial::one(f));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::scaled(const Scalar& s) const {
  return RationalFunction(num_.scaled(s), den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("rational function inverse of zero");
  return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

bool RationalFunction::cross_equal(const RationalFunction& a,
                                   const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (n.find(' ') != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

bool a0_membership(const RationalFunction& r) {
  return r.num().eval0().is_zero() && r.den().eval0().is_one();
}

RationalFunction a0_quasi_inverse(const RationalFunction& x) {
  if (!a0_membership(x))
    throw std::invalid_argument("quasi-inverse: element is not in A0");
  return RationalFunction(-x.num(), x.den() + x.num());
}

namespace {

// Cantor pairing inverse: n -> (a, b)
std::pair<std::size_t, std::size_t> unpair(std::size_t n) {
  std::size_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  std::size_t b = n - w * (w + 1) / 2;
  return {w - b, b};
}

} // namespace

Scalar nth_rational(std::size_t n) {
  if (n == 0) return Scalar::rational(0);
  // sign-interleaved enumeration of positive rationals by diagonals
  bool neg = (n % 2) == 0;
  std::size_t k = (n - 1) / 2; // index into positive rationals
  // walk coprime pairs (num, den) by increasing num+den
  std::size_t seen = 0;
  for (std::size_t s = 2;; ++s) {
    for (std::size_t num = 1; num < s; ++num) {
      std::size_t den = s - num;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), mpz_class(static_cast<unsigned long>(num)).get_mpz_t(),
              mpz_class(static_cast<unsigned long>(den)).get_mpz_t());
      if (g != 1) continue;
      if (seen == k) {
        auto q = Scalar::rational(static_cast<long>(num), static_cast<long>(den));
        return neg ? -q : q;
      }
      ++seen;
    }
  }
}

Polynomial nth_unit_polynomial(std::size_t n, Field f) {
  if (n == 0) return Polynomial::one(f);
  auto [dm1, m] = unpair(n - 1);
  std::size_t deg = dm1 + 1;
  std::vector<Scalar> coeffs;
  coeffs.push_back(f.one()); // g(0) = 1
  std::size_t rest = m;
  for (std::size_t i = 1; i <= deg; ++i) {
    std::size_t idx;
    if (i < deg) {
      auto [a, b] = unpair(rest);
      idx = a;
      rest = b;
    } else {
      idx = rest;
    }
    Scalar c = f.is_rational() ? nth_rational(idx)
                               : f.integer(static_cast<long>(idx));
    coeffs.push_back(c);
  }
  return Polynomial(f, std::move(coeffs));
}

RationalFunction nth_a0_generator(std::size_t n, Field f) {
  return RationalFunction(Polynomial::variable(f), nth_unit_polynomial(n, f));
}

} // namespace lpwr
