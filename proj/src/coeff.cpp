#include "lpwr/coeff.hpp"

namespace lpwr {

AlgElem CoeffAlgebra::symbol(const std::string& sym, bool) const {
  throw std::invalid_argument("unknown coefficient symbol '" + sym + "' in " + name());
}

std::vector<std::pair<std::string, Scalar>>
CoeffAlgebra::coords(const AlgElem&) const {
  throw std::logic_error(name() + " has no canonical linear coordinates");
}

std::vector<std::vector<std::pair<std::string, Scalar>>>
CoeffAlgebra::batch_coords(const std::vector<AlgElem>& elems) const {
  std::vector<std::vector<std::pair<std::string, Scalar>>> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(coords(e));
  return out;
}

// ---------------------------------------------------------------- FieldCoeff

AlgElem FieldCoeff::add(const AlgElem& a, const AlgElem& b) const {
  return AlgElem::of(a.as<Scalar>() + b.as<Scalar>());
}
AlgElem FieldCoeff::negate(const AlgElem& a) const {
  return AlgElem::of(-a.as<Scalar>());
}
AlgElem FieldCoeff::mul(const AlgElem& a, const AlgElem& b) const {
  return AlgElem::of(a.as<Scalar>() * b.as<Scalar>());
}
AlgElem FieldCoeff::scale(const Scalar& s, const AlgElem& a) const {
  return AlgElem::of(s * a.as<Scalar>());
}
bool FieldCoeff::is_zero(const AlgElem& a) const {
  return a.as<Scalar>().is_zero();
}
std::string FieldCoeff::str(const AlgElem& a) const {
  return a.as<Scalar>().str();
}
AlgElem FieldCoeff::idempotent(const std::string& name) const {
  if (name != "1") throw std::invalid_argument("unknown idempotent '" + name + "'");
  return one();
}
AlgElem FieldCoeff::generator(std::size_t) const {
  throw std::out_of_range("the field has no generator sequence");
}
AlgElem FieldCoeff::sample(std::mt19937_64& rng) const {
  long n = static_cast<long>(rng() % 9) - 4;
  return AlgElem::of(f_.integer(n));
}
std::vector<std::pair<std::string, Scalar>>
FieldCoeff::coords(const AlgElem& a) const {
  const Scalar& s = a.as<Scalar>();
  if (s.is_zero()) return {};
  return {{"1", s}};
}

// ----------------------------------------------------------------- PolyCoeff

AlgElem PolyCoeff::add(const AlgElem& a, const AlgElem& b) const {
  return AlgElem::of(a.as<Polynomial>() + b.as<Polynomial>());
}
AlgElem PolyCoeff::negate(const AlgElem& a) const {
  return AlgElem::of(-a.as<Polynomial>());
}
AlgElem PolyCoeff::mul(const AlgElem& a, const AlgElem& b) const {
  return AlgElem::of(a.as<Polynomial>() * b.as<Polynomial>());
}
AlgElem PolyCoeff::scale(const Scalar& s, const AlgElem& a) const {
  return AlgElem::of(a.as<Polynomial>().scaled(s));
}
bool PolyCoeff::is_zero(const AlgElem& a) const {
  return a.as<Polynomial>().is_zero();
}
std::string PolyCoeff::str(const AlgElem& a) const {
  return a.as<Polynomial>().str(var_);
}
AlgElem PolyCoeff::idempotent(const std::string& name) const {
  if (name != "1") throw std::invalid_argument("unknown idempotent '" + name + "'");
  return one();
}
AlgElem PolyCoeff::generator(std::size_t i) const {
  Polynomial x = Polynomial::variable(f_);
  Polynomial p = x;
  for (std::size_t k = 0; k < i; ++k) p = p * x;
  return AlgElem::of(p);
}
AlgElem PolyCoeff::symbol(const std::string& sym, bool star) const {
  if (star || sym != var_)
    return CoeffAlgebra::symbol(sym, star);
  return AlgElem::of(Polynomial::variable(f_));
}
AlgElem PolyCoeff::sample(std::mt19937_64& rng) const {
  std::vector<Scalar> c;
  std::size_t deg = rng() % 3;
  for (std::size_t i = 0; i <= deg; ++i)
    c.push_back(f_.integer(static_cast<long>(rng() % 7) - 3));
  return AlgElem::of(Polynomial(f_, std::move(c)));
}
std::vector<std::pair<std::string, Scalar>>
PolyCoeff::coords(const AlgElem& a) const {
  const Polynomial& p = a.as<Polynomial>();
  std::vector<std::pair<std::string, Scalar>> out;
  for (long i = 0; i <= p.degree(); ++i) {
    Scalar c = p.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) out.emplace_back(var_ + "^" + std::to_string(i), c);
  }
  return out;
}

// ----------------------------------------------------------- RatFunUnitCoeff

AlgElem RatFunUnitCoeff::make(Scalar unit, RationalFunction a0) {
  if (!a0_membership(a0))
    throw std::invalid_argument("RatFunUnitCoeff: component is not in A0");
  return AlgElem::of(Elem{std::move(unit), std::move(a0)});
}

AlgElem RatFunUnitCoeff::pure(RationalFunction a0) {
  Field f = a0.field();
  return make(f.zero(), std::move(a0));
}

AlgElem RatFunUnitCoeff::zero() const {
  return AlgElem::of(Elem{f_.zero(), RationalFunction::zero(f_)});
}
AlgElem RatFunUnitCoeff::one() const {
  return AlgElem::of(Elem{f_.one(), RationalFunction::zero(f_)});
}
AlgElem RatFunUnitCoeff::add(const AlgElem& a, const AlgElem& b) const {
  const Elem &x = a.as<Elem>(), &y = b.as<Elem>();
  return AlgElem::of(Elem{x.unit + y.unit, x.a0 + y.a0});
}
AlgElem RatFunUnitCoeff::negate(const AlgElem& a) const {
  const Elem& x = a.as<Elem>();
  return AlgElem::of(Elem{-x.unit, -x.a0});
}
AlgElem RatFunUnitCoeff::mul(const AlgElem& a, const AlgElem& b) const {
  const Elem &x = a.as<Elem>(), &y = b.as<Elem>();
  // (c.1 + r)(d.1 + s) = cd.1 + (cs + dr + rs)
  return AlgElem::of(Elem{x.unit * y.unit, y.a0.scaled(x.unit) +
                                               x.a0.scaled(y.unit) +
                                               x.a0 * y.a0});
}
AlgElem RatFunUnitCoeff::scale(const Scalar& s, const AlgElem& a) const {
  const Elem& x = a.as<Elem>();
  return AlgElem::of(Elem{s * x.unit, x.a0.scaled(s)});
}
bool RatFunUnitCoeff::is_zero(const AlgElem& a) const {
  const Elem& x = a.as<Elem>();
  return x.unit.is_zero() && x.a0.is_zero();
}
std::string RatFunUnitCoeff::str(const AlgElem& a) const {
  const Elem& x = a.as<Elem>();
  if (x.a0.is_zero()) return x.unit.str();
  if (x.unit.is_zero()) return x.a0.str();
  return x.unit.str() + " + " + x.a0.str();
}
AlgElem RatFunUnitCoeff::idempotent(const std::string& name) const {
  if (name != "1") throw std::invalid_argument("unknown idempotent '" + name + "'");
  return one();
}
AlgElem RatFunUnitCoeff::generator(std::size_t i) const {
  return pure(nth_a0_generator(i, f_));
}
AlgElem RatFunUnitCoeff::symbol(const std::string& sym, bool star) const {
  if (star || sym != "t") return CoeffAlgebra::symbol(sym, star);
  return pure(RationalFunction::variable(f_));
}
AlgElem RatFunUnitCoeff::sample(std::mt19937_64& rng) const {
  auto small_poly = [&](bool unit_term) {
    std::vector<Scalar> c;
    c.push_back(unit_term ? f_.one() : f_.zero());
    std::size_t deg = rng() % 3;
    for (std::size_t i = 0; i < deg; ++i)
      c.push_back(f_.integer(static_cast<long>(rng() % 5) - 2));
    return Polynomial(f_, std::move(c));
  };
  Polynomial num = Polynomial::variable(f_) * small_poly(false);
  Polynomial den = small_poly(true);
  Scalar unit = f_.integer(static_cast<long>(rng() % 5) - 2);
  return AlgElem::of(Elem{unit, RationalFunction(num, den)});
}

std::vector<std::vector<std::pair<std::string, Scalar>>>
RatFunUnitCoeff::batch_coords(const std::vector<AlgElem>& elems) const {
  // view c.1 + f/g as the single rational function (cg + f)/g and bring the
  // whole family over one common denominator; numerator coefficients are
  // then honest linear coordinates for this batch
  std::vector<RationalFunction> fracs;
  fracs.reserve(elems.size());
  Polynomial common = Polynomial::one(f_);
  for (const auto& e : elems) {
    const Elem& x = e.as<Elem>();
    RationalFunction r =
        x.a0 + RationalFunction(Polynomial::constant(x.unit), Polynomial::one(f_));
    // lcm(common, den) = common * den / gcd
    Polynomial g = Polynomial::gcd(common, r.den());
    common = common * r.den().divmod(g).first;
    fracs.push_back(std::move(r));
  }
  std::vector<std::vector<std::pair<std::string, Scalar>>> out;
  out.reserve(fracs.size());
  for (const auto& r : fracs) {
    Polynomial numer = r.num() * common.divmod(r.den()).first;
    std::vector<std::pair<std::string, Scalar>> v;
    for (long i = 0; i <= numer.degree(); ++i) {
      Scalar c = numer.coeff(static_cast<std::size_t>(i));
      if (!c.is_zero()) v.emplace_back("t^" + std::to_string(i), c);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// --------------------------------------------------------------------- misc

std::vector<std::string> check_idempotent_family(const CoeffAlgebra& alg) {
  std::vector<std::string> bad;
  auto names = alg.idempotent_names();
  for (const auto& n : names) {
    AlgElem e = alg.idempotent(n);
    if (!alg.equal(alg.mul(e, e), e))
      bad.push_back("idempotent '" + n + "' fails e*e = e");
    for (const auto& m : names) {
      if (m == n) continue;
      if (!alg.is_zero(alg.mul(e, alg.idempotent(m))))
        bad.push_back("idempotents '" + n + "', '" + m + "' are not orthogonal");
    }
  }
  return bad;
}

} // namespace lpwr
