#include "lpwr/poly.hpp"

#include <stdexcept>

namespace lpwr {

Polynomial::Polynomial(Field f, std::vector<Scalar> coeffs)
    : field_(f), c_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(Scalar c) {
  Polynomial p(c.field());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

Polynomial Polynomial::variable(Field f) {
  Polynomial p(f);
  p.c_ = {f.zero(), f.one()};
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : field_.zero();
}

Scalar Polynomial::eval0() const { return coeff(0); }

Scalar Polynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(field_);
  std::size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(coeff(i) + o.coeff(i));
  r.trim();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(field_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Polynomial r(field_);
  if (s.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * s);
  r.trim();
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q(field_), r = *this;
  if (r.degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1,
              field_.zero());
  Scalar dlead_inv = d.leading().inverse();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    long shift = r.degree() - d.degree();
    Scalar f = r.leading() * dlead_inv;
    q.c_[static_cast<std::size_t>(shift)] = f;
    // r -= f * t^shift * d
    for (std::size_t i = 0; i < d.c_.size(); ++i)
      r.c_[i + static_cast<std::size_t>(shift)] -= f * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(a.leading().inverse()); // monic
  return a;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return c_ == o.c_;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Scalar c = c_[i];
    if (first) {
      if (c.is_negative()) {
        out += "-";
        c = -c;
      }
    } else {
      if (c.is_negative()) {
        out += " - ";
        c = -c;
      } else {
        out += " + ";
      }
    }
    first = false;
    std::string pow =
        i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += c.str();
    } else if (c.is_one()) {
      out += pow;
    } else {
      out += c.str() + "*" + pow;
    }
  }
  return out;
}

} // namespace lpwr
