#ifndef LPWR_COEFF_HPP
#define LPWR_COEFF_HPP

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <typeinfo>
#include <utility>
#include <vector>

#include "lpwr/ratfun.hpp"
#include "lpwr/scalar.hpp"

namespace lpwr {

/// Type-erased immutable element of a coefficient algebra.  Values are owned
/// by shared pointers, so copies are cheap and elements behave like values.
class AlgElem {
  struct Holder {
    virtual ~Holder() = default;
  };
  template <class T>
  struct Model final : Holder {
    explicit Model(T v) : value(std::move(v)) {}
    T value;
  };

public:
  AlgElem() = default;
  bool empty() const { return !p_; }

  template <class T>
  static AlgElem of(T value) {
    AlgElem e;
    e.p_ = std::make_shared<Model<T>>(std::move(value));
    return e;
  }

  template <class T>
  const T& as() const {
    auto* m = dynamic_cast<const Model<T>*>(p_.get());
    if (!m) throw std::logic_error("AlgElem: wrong element type");
    return m->value;
  }

private:
  std::shared_ptr<const Holder> p_;
};

/// Pluggable unital coefficient algebra over the scalar field, with a
/// designated family E of pairwise orthogonal idempotents (addressed by
/// name) and a countable generator sequence a_0, a_1, ...
///
/// Instances must be unital; a non-unital algebra is wrapped with a formal
/// adjoined unit before it is used here (see RatFunUnitCoeff).
class CoeffAlgebra {
public:
  virtual ~CoeffAlgebra() = default;

  virtual std::string name() const = 0;
  virtual Field field() const = 0;

  virtual AlgElem zero() const = 0;
  virtual AlgElem one() const = 0;
  virtual AlgElem add(const AlgElem& a, const AlgElem& b) const = 0;
  virtual AlgElem negate(const AlgElem& a) const = 0;
  virtual AlgElem mul(const AlgElem& a, const AlgElem& b) const = 0;
  virtual AlgElem scale(const Scalar& s, const AlgElem& a) const = 0;
  virtual bool is_zero(const AlgElem& a) const = 0;
  virtual std::string str(const AlgElem& a) const = 0;

  AlgElem sub(const AlgElem& a, const AlgElem& b) const {
    return add(a, negate(b));
  }
  bool equal(const AlgElem& a, const AlgElem& b) const {
    return is_zero(sub(a, b));
  }

  /// The designated family E, in a fixed order.
  virtual std::vector<std::string> idempotent_names() const = 0;
  virtual AlgElem idempotent(const std::string& name) const = 0;

  /// Generator sequence; count may be SIZE_MAX for an infinite sequence.
  virtual std::size_t generator_count() const = 0;
  virtual AlgElem generator(std::size_t i) const = 0;

  /// Resolves a symbol of the expression grammar (e.g. "x" in F[x]).
  virtual AlgElem symbol(const std::string& sym, bool star) const;

  /// Small random element for property tests; deterministic given the engine.
  virtual AlgElem sample(std::mt19937_64& rng) const = 0;

  /// Linear coordinates over a canonical basis, when one exists.  Keys are
  /// opaque strings; coords must be linear in the element.
  virtual bool has_coords() const { return false; }
  virtual std::vector<std::pair<std::string, Scalar>> coords(const AlgElem&) const;

  /// Family-wise coordinates (consistent keys within one batch); used where
  /// per-element coordinates do not exist, e.g. for rational functions via a
  /// common denominator.
  virtual bool has_batch_coords() const { return has_coords(); }
  virtual std::vector<std::vector<std::pair<std::string, Scalar>>>
  batch_coords(const std::vector<AlgElem>& elems) const;
};

using CoeffAlgebraPtr = std::shared_ptr<const CoeffAlgebra>;

/// A = F itself; E = {1}.
class FieldCoeff final : public CoeffAlgebra {
public:
  explicit FieldCoeff(Field f) : f_(f) {}

  std::string name() const override { return f_.str(); }
  Field field() const override { return f_; }
  AlgElem zero() const override { return AlgElem::of(f_.zero()); }
  AlgElem one() const override { return AlgElem::of(f_.one()); }
  AlgElem add(const AlgElem& a, const AlgElem& b) const override;
  AlgElem negate(const AlgElem& a) const override;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const override;
  AlgElem scale(const Scalar& s, const AlgElem& a) const override;
  bool is_zero(const AlgElem& a) const override;
  std::string str(const AlgElem& a) const override;
  std::vector<std::string> idempotent_names() const override { return {"1"}; }
  AlgElem idempotent(const std::string& name) const override;
  std::size_t generator_count() const override { return 0; }
  AlgElem generator(std::size_t) const override;
  AlgElem sample(std::mt19937_64& rng) const override;
  bool has_coords() const override { return true; }
  std::vector<std::pair<std::string, Scalar>> coords(const AlgElem&) const override;

private:
  Field f_;
};

/// A = F[x]; E = {1}; generators a_i = x^(i+1).
class PolyCoeff final : public CoeffAlgebra {
public:
  explicit PolyCoeff(Field f, std::string var = "x") : f_(f), var_(std::move(var)) {}

  std::string name() const override { return f_.str() + "[" + var_ + "]"; }
  Field field() const override { return f_; }
  AlgElem zero() const override { return AlgElem::of(Polynomial::zero(f_)); }
  AlgElem one() const override { return AlgElem::of(Polynomial::one(f_)); }
  AlgElem add(const AlgElem& a, const AlgElem& b) const override;
  AlgElem negate(const AlgElem& a) const override;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const override;
  AlgElem scale(const Scalar& s, const AlgElem& a) const override;
  bool is_zero(const AlgElem& a) const override;
  std::string str(const AlgElem& a) const override;
  std::vector<std::string> idempotent_names() const override { return {"1"}; }
  AlgElem idempotent(const std::string& name) const override;
  std::size_t generator_count() const override { return SIZE_MAX; }
  AlgElem generator(std::size_t i) const override;
  AlgElem symbol(const std::string& sym, bool star) const override;
  AlgElem sample(std::mt19937_64& rng) const override;
  bool has_coords() const override { return true; }
  std::vector<std::pair<std::string, Scalar>> coords(const AlgElem&) const override;

private:
  Field f_;
  std::string var_;
};

/// A = F.1 + A0, the unital closure of A0 = { f/g : f(0)=0, g(0)=1 }.
/// Elements are formal pairs c.1 + r with r in A0; E = {1}; the generator
/// sequence enumerates t/g over all unit polynomials g (a_0 = t).
class RatFunUnitCoeff final : public CoeffAlgebra {
public:
  /// c.1 + r with r in A0.
  struct Elem {
    Scalar unit;
    RationalFunction a0;
  };

  explicit RatFunUnitCoeff(Field f) : f_(f) {}

  static AlgElem make(Scalar unit, RationalFunction a0);
  /// Wraps an A0 member (throws if membership fails).
  static AlgElem pure(RationalFunction a0);

  std::string name() const override { return "F.1+A0"; }
  Field field() const override { return f_; }
  AlgElem zero() const override;
  AlgElem one() const override;
  AlgElem add(const AlgElem& a, const AlgElem& b) const override;
  AlgElem negate(const AlgElem& a) const override;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const override;
  AlgElem scale(const Scalar& s, const AlgElem& a) const override;
  bool is_zero(const AlgElem& a) const override;
  std::string str(const AlgElem& a) const override;
  std::vector<std::string> idempotent_names() const override { return {"1"}; }
  AlgElem idempotent(const std::string& name) const override;
  std::size_t generator_count() const override { return SIZE_MAX; }
  AlgElem generator(std::size_t i) const override;
  AlgElem symbol(const std::string& sym, bool star) const override;
  AlgElem sample(std::mt19937_64& rng) const override;
  bool has_coords() const override { return false; }
  bool has_batch_coords() const override { return true; }
  std::vector<std::vector<std::pair<std::string, Scalar>>>
  batch_coords(const std::vector<AlgElem>& elems) const override;

private:
  Field f_;
};

/// Checks e*e = e and e*e' = 0 for all pairs from the designated family;
/// returns a list of violations (empty = pass).
std::vector<std::string> check_idempotent_family(const CoeffAlgebra& alg);

} // namespace lpwr

#endif
