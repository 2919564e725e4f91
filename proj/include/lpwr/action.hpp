#ifndef LPWR_ACTION_HPP
#define LPWR_ACTION_HPP

#include <functional>
#include <map>
#include <random>

#include "lpwr/extgraph.hpp"
#include "lpwr/report.hpp"

namespace lpwr {

/// A pointed set with a two-sided S-action, supplied as total evaluation
/// procedures (x0 encodes annihilation).  The genuine instance is the
/// bridge-path set of an extended graph; corrupted variants exist as
/// negative controls for the axiom and associativity probes.
struct PointedBiset {
  ExtendedGraphPtr eg;
  std::string name;
  std::function<BridgePath(const SGElement&, const BridgePath&)> left;
  std::function<BridgePath(const BridgePath&, const SGElement&)> right;
};

PointedBiset bridge_biset(ExtendedGraphPtr eg);
/// Left action replaced by a constant live point; violates zero-absorption
/// and property (1).
PointedBiset corrupted_biset(ExtendedGraphPtr eg, BridgePath fixed_live);

struct BridgePairCmp {
  const ExtendedGraph* eg = nullptr;
  bool operator()(const std::pair<BridgePath, BridgePath>& a,
                  const std::pair<BridgePath, BridgePath>& b) const {
    if (!(a.first == b.first)) return bridge_path_less(*eg, a.first, b.first);
    return bridge_path_less(*eg, a.second, b.second);
  }
};

/// Finite matrix over the coefficient algebra indexed by bridge paths;
/// only nonzero entries are stored.
class MatrixPart {
public:
  using EntryMap =
      std::map<std::pair<BridgePath, BridgePath>, AlgElem, BridgePairCmp>;

  explicit MatrixPart(ExtendedGraphPtr eg);

  const ExtendedGraphPtr& extended() const { return eg_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t entry_count() const { return entries_.size(); }
  const EntryMap& entries() const { return entries_; }

  void add_entry(const BridgePath& x, const BridgePath& y, const AlgElem& a);
  AlgElem entry(const BridgePath& x, const BridgePath& y) const;

  MatrixPart operator+(const MatrixPart& o) const;
  MatrixPart operator-() const;
  MatrixPart scaled(const Scalar& s) const;
  bool operator==(const MatrixPart& o) const;
  std::string str() const;

private:
  ExtendedGraphPtr eg_;
  EntryMap entries_;
};

/// Element of the ambient algebra F0[S] + M_{X x X}(A): a semigroup part
/// (a Cohn element over the base graph) plus a finite matrix part.  No
/// quotient is applied here; the wreath product layers its normal form on
/// top of this type.
struct ActionElement {
  CohnElement sg;
  MatrixPart mat;

  static ActionElement zero(const ExtendedGraphPtr& eg);
  static ActionElement of_sg(const ExtendedGraphPtr& eg, CohnElement c);
  static ActionElement of_unit(const ExtendedGraphPtr& eg, const AlgElem& a,
                               const BridgePath& x, const BridgePath& y);

  bool is_zero() const { return sg.is_zero() && mat.is_zero(); }
  ActionElement operator+(const ActionElement& o) const;
  ActionElement operator-(const ActionElement& o) const;
  ActionElement operator-() const;
  ActionElement scaled(const Scalar& s) const;
  bool operator==(const ActionElement& o) const;
  std::string str() const;
};

/// The ambient product: semigroup x semigroup, the two action rules for
/// semigroup x matrix, and matrix-unit composition.
ActionElement action_mul(const ActionElement& u, const ActionElement& v,
                         const PointedBiset& b);

/// Checks zero absorption, associativity of the two actions, and properties
/// (1) and (2) over the sample cross product; empty report = pass.
Report biset_axioms_check(const PointedBiset& b, const std::vector<SGElement>& sample_s,
                          const std::vector<BridgePath>& sample_x);

/// Random associativity instances of (uv)w = u(vw), preceded by a
/// deterministic sweep of the critical (matrix, semigroup, matrix) shape.
Report associativity_probe(const PointedBiset& b, int samples, std::uint64_t seed);

} // namespace lpwr

#endif
