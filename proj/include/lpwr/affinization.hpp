#ifndef LPWR_AFFINIZATION_HPP
#define LPWR_AFFINIZATION_HPP

#include <functional>
#include <optional>

#include "lpwr/linalg.hpp"
#include "lpwr/report.hpp"
#include "lpwr/wreath.hpp"

namespace lpwr {

/// The loop wreath A wr L(loop) = F[t,t^-1] + M_{NxN}(A), under the live
/// index convention c^i e <-> i (so tt^-1 = v - (1)_{0,0} and all four shift
/// rules hold; see README).  t = c and t^-1 = c*.
struct LoopWreath {
  ExtendedGraphPtr eg; // loop graph {v}, {c} with one bridge e into E
  WreathElement t, tinv, v;

  /// The index i as the bridge path c^i e.
  BridgePath index(long i) const;
  long index_of(const BridgePath& x) const; // -1 for x0
  WreathElement unit(long i, long j) const; // (1)_{i,j}
  WreathElement matrix_unit(const AlgElem& a, long i, long j) const;
  /// Prints with N-indexed matrix units, e.g. "v - [1 @ 0, 0]".
  std::string str(const WreathElement& x) const;
};

using LoopWreathPtr = std::shared_ptr<const LoopWreath>;

LoopWreathPtr make_loop_wreath(CoeffAlgebraPtr a);

/// Lazily evaluated row/column-finite N x N matrix over A: finitely many
/// diagonals (offset d = row - col, entries generated per column) plus a
/// finite map of sparse corrections.  Since there are finitely many
/// diagonals, every row and column has finitely many nonzero entries, which
/// is precisely membership in M~.
class BandedOperator {
public:
  /// entry at (col + offset, col); must be pure and total for col >= 0.
  using EntryFn = std::function<AlgElem(long col)>;

  explicit BandedOperator(CoeffAlgebraPtr a);
  static BandedOperator diagonal(CoeffAlgebraPtr a, long offset, EntryFn gen);

  const CoeffAlgebraPtr& coeff() const { return a_; }
  void add_correction(long i, long j, const AlgElem& v);
  AlgElem entry(long i, long j) const;

  bool is_finite() const { return diags_.empty(); }
  std::size_t diagonal_count() const { return diags_.size(); }
  long max_abs_offset() const;
  const std::map<std::pair<long, long>, AlgElem>& corrections() const {
    return corr_;
  }

  BandedOperator operator+(const BandedOperator& o) const;
  BandedOperator operator-() const;
  BandedOperator scaled(const Scalar& s) const;
  /// Relabels rows by k -> k - j + i (defined for k >= j), scaling by s:
  /// the left action of the Laurent monomial c^i (c*)^j.
  BandedOperator row_shifted(long i, long j, const Scalar& s) const;
  /// Same on columns: the right action of c^i (c*)^j.
  BandedOperator col_shifted(long i, long j, const Scalar& s) const;

  /// Exact n x n upper-left window.
  std::vector<std::vector<AlgElem>> window(long n) const;
  /// Exact equality for operators without diagonals.
  static bool finite_equal(const BandedOperator& x, const BandedOperator& y);
  static bool window_equal(const BandedOperator& x, const BandedOperator& y, long n);

private:
  struct Diag {
    long offset;
    EntryFn gen;
  };
  CoeffAlgebraPtr a_;
  std::vector<Diag> diags_;
  std::map<std::pair<long, long>, AlgElem> corr_;

  friend BandedOperator banded_mul(const BandedOperator&, const BandedOperator&);
};

BandedOperator banded_mul(const BandedOperator& x, const BandedOperator& y);

/// Element of L(loop) + M~_{NxN}(A): a Laurent part (normal form over the
/// loop graph) plus a banded operator.  This is the ambient algebra of
/// containment chain F[t^-1,t] + M_{NxN}(A) < B < F[t^-1,t] + M~_{NxN}(A).
class AffineElement {
public:
  AffineElement(LoopWreathPtr ctx, CohnElement laurent, BandedOperator mat);

  static AffineElement zero(LoopWreathPtr ctx);
  static AffineElement laurent(LoopWreathPtr ctx, long power); // t^k (k may be < 0)
  static AffineElement from_banded(LoopWreathPtr ctx, BandedOperator mat);
  static AffineElement unit00(LoopWreathPtr ctx); // (1)_{0,0}
  /// a = sum_i (a_i)_{i,i} over the generator sequence of A.
  static AffineElement diagonal_generator(LoopWreathPtr ctx);

  const LoopWreathPtr& ctx() const { return ctx_; }
  const CohnElement& laurent_part() const { return laurent_; }
  const BandedOperator& matrix_part() const { return mat_; }
  bool laurent_zero() const { return laurent_.is_zero(); }

  AffineElement operator+(const AffineElement& o) const;
  AffineElement operator-() const;
  AffineElement scaled(const Scalar& s) const;

  /// Exact equality when both matrix parts are correction-only.
  static bool finite_equal(const AffineElement& x, const AffineElement& y);
  static bool window_equal(const AffineElement& x, const AffineElement& y, long n);

private:
  LoopWreathPtr ctx_;
  CohnElement laurent_;
  BandedOperator mat_;
};

AffineElement affine_mul(const AffineElement& x, const AffineElement& y);

// -- prop3: affine containments -----------------------------------------------

enum class Prop3Gen { T, Tinv, A, E00 };
std::string prop3_gen_name(Prop3Gen g);

struct Prop3Witness {
  std::vector<Prop3Gen> word;
  AffineElement value;
  bool verified;
};

/// Explicit generator word for the matrix unit (a_{k1} ... a_{km})_{i,j},
/// built from transporters (1)_{i,k} = t^i (1)_{0,0} (t^-1)^k interleaved
/// with a; evaluated and checked against the target.
Prop3Witness prop3_witness(const LoopWreathPtr& ctx,
                           const std::vector<std::size_t>& word_indices, long i,
                           long j, std::optional<AffineElement> a_override = {});

struct AffineSpanResult {
  std::size_t word_count = 0;
  std::size_t dimension = 0; // rank of the window coordinates
  std::vector<std::string> basis_words;
  long max_offset = 0;
  long max_laurent_degree = 0;
  std::vector<bool> probe_in_span;
};

/// Spans all products of <= degree generators; exact linear algebra over a
/// window large enough that the reported entries are exact.
AffineSpanResult affine_span(const LoopWreathPtr& ctx,
                             const std::vector<std::pair<std::string, AffineElement>>& gens,
                             int degree, int window,
                             const std::vector<AffineElement>& probes = {});

/// Lower containment (every t^k and every (w)_{i,j} with |w| <= max_word,
/// i,j < window has a verified witness) and upper containment (every spanned
/// element is banded with offsets bounded by the degree).
Report prop3_check(const LoopWreathPtr& ctx, int degree, int window,
                   int max_word = 2, std::optional<AffineElement> a_override = {});

// -- radical probes -----------------------------------------------------------

/// Quasi-inverse of a square matrix over A0: solves (1+m) y = -m exactly over
/// the rational function field and checks both quasi-group identities and
/// entrywise A0 membership.
std::vector<std::vector<RationalFunction>>
radical_matrix_quasi_inverse(const std::vector<std::vector<RationalFunction>>& m);

} // namespace lpwr

#endif
