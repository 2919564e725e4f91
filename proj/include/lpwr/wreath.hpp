#ifndef LPWR_WREATH_HPP
#define LPWR_WREATH_HPP

#include <random>

#include "lpwr/action.hpp"
#include "lpwr/leavitt.hpp"
#include "lpwr/leavitt_coeff.hpp"
#include "lpwr/linalg.hpp"
#include "lpwr/report.hpp"

namespace lpwr {

/// Element of B = A wr L(Gamma) = (C(Gamma)+I)/J, stored split as a Leavitt
/// part in wreath normal form plus a matrix part over bridge-path indices.
/// The split representation is canonical because J meets the matrix ideal
/// trivially.  Matrix entries always satisfy the corner constraint
/// a = r(p) a r(q).
class WreathElement {
public:
  /// wreath_normal_form: rewrites the semigroup part with the augmented rule
  ///   (p g)(q g)* -> pq* - sum_{f != g} (pf)(qf)* - sum_e (r(e))_{p.e, q.e}
  /// and folds the emitted matrix units into the matrix part.
  static WreathElement normal_form(ActionElement raw, const RewriteOptions& opt = {});

  static WreathElement zero(const ExtendedGraphPtr& eg);
  static WreathElement from_cohn(const ExtendedGraphPtr& eg, CohnElement c);
  static WreathElement from_leavitt(const ExtendedGraphPtr& eg, const LeavittElement& x);
  /// Matrix unit a_{x,y}; throws on a corner violation.
  static WreathElement matrix_unit(const ExtendedGraphPtr& eg, const AlgElem& a,
                                   const BridgePath& x, const BridgePath& y);

  const ExtendedGraphPtr& extended() const { return mat_.extended(); }
  /// Image in the quotient B / (matrix ideal) = L(Gamma).
  LeavittElement leavitt_part() const;
  const CohnElement& leavitt_cohn() const { return lp_; }
  const MatrixPart& matrix_part() const { return mat_; }
  bool is_zero() const { return lp_.is_zero() && mat_.is_zero(); }
  bool is_pure_matrix() const { return lp_.is_zero(); }

  WreathElement operator+(const WreathElement& o) const;
  WreathElement operator-(const WreathElement& o) const;
  WreathElement operator-() const;
  WreathElement scaled(const Scalar& s) const;
  bool operator==(const WreathElement& o) const;
  bool operator!=(const WreathElement& o) const { return !(*this == o); }

  ActionElement raw() const { return ActionElement{lp_, mat_}; }
  std::string str() const;

private:
  WreathElement(CohnElement lp, MatrixPart mat);
  CohnElement lp_; // in wreath normal form
  MatrixPart mat_;
};

WreathElement wreath_mul(const WreathElement& x, const WreathElement& y);

/// CK(v) = CK(v)' - CK(v)'' as a raw element (not normalized; its normal
/// form is zero since CK(v) generates J).
ActionElement ck_full(const ExtendedGraphPtr& eg, int v);

/// Projects a onto the corner r(p) A r(q); used to validate entries.
AlgElem corner_project(const ExtendedGraph& eg, const BridgePath& p,
                       const BridgePath& q, const AlgElem& a);
bool corner_valid(const ExtendedGraph& eg, const MatrixPart& m);

/// Random wreath element with corner-projected matrix entries.
WreathElement sample_wreath_element(const ExtendedGraphPtr& eg, std::mt19937_64& rng);

/// Linear coordinates of a wreath element (requires coefficient coordinates).
CoordVec<Scalar> wreath_coords(const WreathElement& x);

// -- prop1: finite generation -------------------------------------------------

/// The generator list from the finite-generation argument:
/// V, E, E*, (a_i)_{0,0}, (r(e))_{e,0}, (r(e))_{0,e}.
std::vector<WreathElement> prop1_generators(const ExtendedGraphPtr& eg,
                                            const std::vector<AlgElem>& a_gens);

/// Reconstructs every wreath basis element with bridge-path indices of
/// length <= max_index and entry words of length <= max_word over a_gens
/// (plus the normal-form monomials of total length <= max_mono) as an
/// explicit product of prop1 generators of length <= max_word_len, and
/// verifies each witness by evaluation.
Report prop1_check(const ExtendedGraphPtr& eg, const std::vector<AlgElem>& a_gens,
                   int max_index, int max_word, int max_mono, int max_word_len);

// -- prop2: L(Gamma) = L(Gamma(W)) wr L(Gamma/W) ------------------------------

/// The wreath context built from a hereditary saturated subset W: base graph
/// Gamma/W, coefficient algebra L(Gamma(W)) with idempotent family W, and one
/// bridge per edge of E(V\W, W).
struct Prop2Context {
  GraphPtr full;                    // Gamma
  VertexSet w;                      // W
  GraphPtr inside;                  // Gamma(W)
  std::shared_ptr<const LeavittCoeff> coeff; // L(Gamma(W))
  ExtendedGraphPtr eg;              // Gamma/W extended by E(V\W, W)
};

Prop2Context prop2_context(GraphPtr g, Field f, const VertexSet& w);

/// The unique decomposition a = a' + sum p a_pq q* + sum p b_p + sum c_q q* + d
/// of a normal-form element by first entry of its monomial paths into W.
struct Prop2Decomposition {
  CohnElement a_prime;                                    // no vertex in W
  std::map<std::string, std::pair<std::pair<BridgePath, BridgePath>, AlgElem>> a_pq;
  std::map<std::string, std::pair<BridgePath, AlgElem>> b_p;
  std::map<std::string, std::pair<BridgePath, AlgElem>> c_q;
  AlgElem d;
};

Prop2Decomposition prop2_decompose(const Prop2Context& ctx, const LeavittElement& x);

/// The isomorphism L(Gamma) -> L(Gamma(W)) wr L(Gamma/W).
WreathElement prop2_phi(const Prop2Context& ctx, const LeavittElement& x);

struct Prop2Options {
  int maxlen = 4;
  int samples = 300;
  std::uint64_t seed = 0;
};

/// Instance check of the isomorphism: linearity, multiplicativity on random
/// pairs, injectivity on the bounded normal-form span (exact rank), and
/// surjectivity onto the bounded wreath basis via explicit preimages.
Report prop2_verify(GraphPtr g, Field f, const VertexSet& w, const Prop2Options& opt = {});

/// Balloon extension: checks the balloon conditions for v over V \ {v},
/// confirms the quotient graph is a single loop, and runs prop2_verify.
Report balloon_iso_check(GraphPtr g, Field f, int v, const Prop2Options& opt = {});

} // namespace lpwr

#endif
