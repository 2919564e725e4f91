#include "lpwr/action.hpp"

#include <cassert>

#include "lpwr/sampling.hpp"

namespace lpwr {

PointedBiset bridge_biset(ExtendedGraphPtr eg) {
  PointedBiset b;
  b.eg = eg;
  b.name = "bridge paths";
  b.left = [eg](const SGElement& s, const BridgePath& x) {
    return act(*eg, s, x, Side::Left);
  };
  b.right = [eg](const BridgePath& x, const SGElement& s) {
    return act(*eg, s, x, Side::Right);
  };
  return b;
}

PointedBiset corrupted_biset(ExtendedGraphPtr eg, BridgePath fixed_live) {
  PointedBiset b = bridge_biset(eg);
  b.name = "corrupted (constant left action)";
  b.left = [fixed_live](const SGElement&, const BridgePath&) { return fixed_live; };
  return b;
}

MatrixPart::MatrixPart(ExtendedGraphPtr eg)
    : eg_(std::move(eg)), entries_(BridgePairCmp{eg_.get()}) {
  if (!eg_) throw std::invalid_argument("MatrixPart: null extended graph");
}

void MatrixPart::add_entry(const BridgePath& x, const BridgePath& y, const AlgElem& a) {
  const CoeffAlgebra& alg = *eg_->coeff();
  if (alg.is_zero(a)) return;
  assert(bridge_path_valid(*eg_, x) && bridge_path_valid(*eg_, y));
  auto key = std::make_pair(x, y);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), a);
  } else {
    AlgElem sum = alg.add(it->second, a);
    if (alg.is_zero(sum)) {
      entries_.erase(it);
    } else {
      it->second = std::move(sum);
    }
  }
}

AlgElem MatrixPart::entry(const BridgePath& x, const BridgePath& y) const {
  auto it = entries_.find(std::make_pair(x, y));
  return it == entries_.end() ? eg_->coeff()->zero() : it->second;
}

MatrixPart MatrixPart::operator+(const MatrixPart& o) const {
  if (eg_ != o.eg_) throw std::invalid_argument("matrix parts over different carriers");
  MatrixPart r = *this;
  for (const auto& [k, a] : o.entries_) r.add_entry(k.first, k.second, a);
  return r;
}

MatrixPart MatrixPart::operator-() const {
  MatrixPart r(eg_);
  for (const auto& [k, a] : entries_)
    r.entries_.emplace(k, eg_->coeff()->negate(a));
  return r;
}

MatrixPart MatrixPart::scaled(const Scalar& s) const {
  MatrixPart r(eg_);
  if (s.is_zero()) return r;
  for (const auto& [k, a] : entries_) {
    AlgElem v = eg_->coeff()->scale(s, a);
    if (!eg_->coeff()->is_zero(v)) r.entries_.emplace(k, std::move(v));
  }
  return r;
}

bool MatrixPart::operator==(const MatrixPart& o) const {
  if (eg_ != o.eg_) throw std::invalid_argument("matrix parts over different carriers");
  if (entries_.size() != o.entries_.size()) return false;
  auto it = o.entries_.begin();
  for (const auto& [k, a] : entries_) {
    if (!(k.first == it->first.first) || !(k.second == it->first.second)) return false;
    if (!eg_->coeff()->equal(a, it->second)) return false;
    ++it;
  }
  return true;
}

std::string MatrixPart::str() const {
  std::string out;
  bool first = true;
  for (const auto& [k, a] : entries_) {
    if (!first) out += " + ";
    first = false;
    out += "[" + eg_->coeff()->str(a) + " @ " + bridge_path_str(*eg_, k.first) +
           ", " + bridge_path_str(*eg_, k.second) + "]";
  }
  return first ? "0" : out;
}

ActionElement ActionElement::zero(const ExtendedGraphPtr& eg) {
  return ActionElement{CohnElement::zero(eg->base(), eg->field()), MatrixPart(eg)};
}

ActionElement ActionElement::of_sg(const ExtendedGraphPtr& eg, CohnElement c) {
  return ActionElement{std::move(c), MatrixPart(eg)};
}

ActionElement ActionElement::of_unit(const ExtendedGraphPtr& eg, const AlgElem& a,
                                     const BridgePath& x, const BridgePath& y) {
  ActionElement r = zero(eg);
  r.mat.add_entry(x, y, a);
  return r;
}

ActionElement ActionElement::operator+(const ActionElement& o) const {
  return ActionElement{sg + o.sg, mat + o.mat};
}

ActionElement ActionElement::operator-(const ActionElement& o) const {
  return *this + (-o);
}

ActionElement ActionElement::operator-() const {
  return ActionElement{-sg, -mat};
}

ActionElement ActionElement::scaled(const Scalar& s) const {
  return ActionElement{sg.scaled(s), mat.scaled(s)};
}

bool ActionElement::operator==(const ActionElement& o) const {
  return sg == o.sg && mat == o.mat;
}

std::string ActionElement::str() const {
  if (is_zero()) return "0";
  if (mat.is_zero()) return sg.str();
  if (sg.is_zero()) return mat.str();
  return sg.str() + " + " + mat.str();
}

ActionElement action_mul(const ActionElement& u, const ActionElement& v,
                         const PointedBiset& b) {
  const ExtendedGraphPtr& eg = b.eg;
  if (u.mat.extended() != eg || v.mat.extended() != eg)
    throw std::invalid_argument("action_mul: elements over a different carrier");
  const CoeffAlgebra& alg = *eg->coeff();
  ActionElement r = ActionElement::zero(eg);

  // F0[S] x F0[S]
  r.sg = cohn_mul(u.sg, v.sg);

  // s . a_{x,y} = a_{sx,y} unless sx = x0
  for (const auto& [m, c] : u.sg.terms())
    for (const auto& [k, a] : v.mat.entries()) {
      BridgePath sx = b.left(SGElement::of(m), k.first);
      if (sx.is_x0()) continue;
      r.mat.add_entry(sx, k.second, alg.scale(c, a));
    }

  // a_{x,y} . s = a_{x,ys} unless ys = x0
  for (const auto& [k, a] : u.mat.entries())
    for (const auto& [m, c] : v.sg.terms()) {
      BridgePath ys = b.right(k.second, SGElement::of(m));
      if (ys.is_x0()) continue;
      r.mat.add_entry(k.first, ys, alg.scale(c, a));
    }

  // a_{x,y} b_{z,t} = (ab)_{x,t} when y = z
  for (const auto& [ka, a] : u.mat.entries())
    for (const auto& [kb, bb] : v.mat.entries()) {
      if (!(ka.second == kb.first)) continue;
      r.mat.add_entry(ka.first, kb.second, alg.mul(a, bb));
    }

  return r;
}

Report biset_axioms_check(const PointedBiset& b, const std::vector<SGElement>& sample_s,
                          const std::vector<BridgePath>& sample_x) {
  Report rep;
  const ExtendedGraph& eg = *b.eg;
  auto xs = bridge_path_str;
  auto ss = [&](const SGElement& s) { return sg_str(*eg.base(), s); };
  const BridgePath x0 = BridgePath::x0();
  const SGElement s0 = SGElement::zero();

  for (const auto& s : sample_s) {
    if (!b.left(s, x0).is_x0())
      rep.fail("zero absorption: s.x0 != x0 for s = " + ss(s));
    if (!b.right(x0, s).is_x0())
      rep.fail("zero absorption: x0.s != x0 for s = " + ss(s));
  }
  for (const auto& x : sample_x) {
    if (!b.left(s0, x).is_x0())
      rep.fail("zero absorption: s0.x != x0 for x = " + xs(eg, x));
    if (!b.right(x, s0).is_x0())
      rep.fail("zero absorption: x.s0 != x0 for x = " + xs(eg, x));
  }

  for (const auto& s1 : sample_s)
    for (const auto& s2 : sample_s) {
      SGElement s12 = sg_mul(*eg.base(), s1, s2);
      for (const auto& x : sample_x) {
        BridgePath lhs = b.left(s1, b.left(s2, x));
        BridgePath rhs = b.left(s12, x);
        if (!(lhs == rhs))
          rep.fail("left action not associative at s1 = " + ss(s1) +
                   ", s2 = " + ss(s2) + ", x = " + xs(eg, x));
        BridgePath lhs2 = b.right(b.right(x, s1), s2);
        BridgePath rhs2 = b.right(x, s12);
        if (!(lhs2 == rhs2))
          rep.fail("right action not associative at s1 = " + ss(s1) +
                   ", s2 = " + ss(s2) + ", x = " + xs(eg, x));
      }
    }

  for (const auto& s : sample_s)
    for (const auto& x : sample_x) {
      // property (1): s(xs) = x0 => xs = x0; s(xs) != x0 => s(xs) = x
      BridgePath t = b.right(x, s);
      BridgePath sxs = b.left(s, t);
      if (sxs.is_x0()) {
        if (!t.is_x0())
          rep.fail("property (1): s(xs) = x0 but xs != x0 at s = " + ss(s) +
                   ", x = " + xs(eg, x));
      } else if (!(sxs == x)) {
        rep.fail("property (1): s(xs) != x at s = " + ss(s) + ", x = " + xs(eg, x));
      }
      // property (2): (sx)s = x0 => sx = x0; (sx)s != x0 => (sx)s = x
      BridgePath u = b.left(s, x);
      BridgePath sxs2 = b.right(u, s);
      if (sxs2.is_x0()) {
        if (!u.is_x0())
          rep.fail("property (2): (sx)s = x0 but sx != x0 at s = " + ss(s) +
                   ", x = " + xs(eg, x));
      } else if (!(sxs2 == x)) {
        rep.fail("property (2): (sx)s != x at s = " + ss(s) + ", x = " + xs(eg, x));
      }
    }
  return rep;
}

Report associativity_probe(const PointedBiset& b, int samples, std::uint64_t seed) {
  Report rep;
  const ExtendedGraphPtr& eg = b.eg;
  std::mt19937_64 rng(seed);

  // deterministic sweep of the critical shape (a_{x,y} s) b_{z,t}
  auto xs = enumerate_bridge_paths(*eg, 3);
  auto paths = enumerate_paths(*eg->base(), 2);
  AlgElem one = eg->coeff()->one();
  int checked = 0;
  for (const auto& x : xs) {
    if (x.is_x0()) continue;
    for (const auto& y : xs) {
      if (y.is_x0()) continue;
      for (const auto& p : paths)
        for (const auto& q : paths) {
          if (path_range(*eg->base(), p) != path_range(*eg->base(), q)) continue;
          SGElement s = sg_make(*eg->base(), p, q);
          for (const auto& z : xs) {
            if (z.is_x0()) continue;
            ActionElement u = ActionElement::of_unit(eg, one, x, y);
            ActionElement m = ActionElement::of_sg(
                eg, CohnElement::monomial(eg->base(), eg->field(), *s.m,
                                          eg->field().one()));
            ActionElement w = ActionElement::of_unit(eg, one, z, z);
            ActionElement lhs = action_mul(action_mul(u, m, b), w, b);
            ActionElement rhs = action_mul(u, action_mul(m, w, b), b);
            if (!(lhs == rhs)) {
              rep.fail("associativity fails at (a_{" + bridge_path_str(*eg, x) + "," +
                       bridge_path_str(*eg, y) + "} " + sg_str(*eg->base(), s) +
                       ") b_{" + bridge_path_str(*eg, z) + "," +
                       bridge_path_str(*eg, z) + "}");
              rep.note("critical-shape counterexample found after " +
                       std::to_string(checked) + " structured triples");
              return rep;
            }
            ++checked;
          }
        }
    }
  }
  rep.note("structured critical-shape triples checked: " + std::to_string(checked));

  for (int i = 0; i < samples; ++i) {
    ActionElement u = sample_action_element(eg, rng);
    ActionElement v = sample_action_element(eg, rng);
    ActionElement w = sample_action_element(eg, rng);
    ActionElement lhs = action_mul(action_mul(u, v, b), w, b);
    ActionElement rhs = action_mul(u, action_mul(v, w, b), b);
    if (!(lhs == rhs)) {
      rep.fail("associativity fails on random triple " + std::to_string(i) +
               " (seed " + std::to_string(seed) + ")");
      return rep;
    }
  }
  rep.note("random triples checked: " + std::to_string(samples));
  return rep;
}

} // namespace lpwr
