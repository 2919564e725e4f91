#ifndef LPWR_LEAVITT_HPP
#define LPWR_LEAVITT_HPP

#include <functional>
#include <random>

#include "lpwr/cohn.hpp"

namespace lpwr {

/// The fixed outgoing edge gamma(v) orienting the relation CK(v)' = 0 as a
/// terminating rewrite rule: the lexicographically least edge id in s^-1(v).
/// Throws for sinks.
int special_edge(const Graph& g, int v);

/// True when the monomial is a redex: p and q both end with the same edge g
/// and g = gamma(s(g)).
bool is_redex(const Graph& g, const Mono& m);

/// Rewrite-order strategies; all strategies reach the same normal form
/// (checked by the confluence tests).
struct RewriteOptions {
  enum class Pick { First, Last, Random };
  Pick pick = Pick::First;
  std::uint64_t seed = 0;
  /// Assert per step that the multiset of redex sizes strictly decreases.
  /// On by default in debug builds.
#ifdef NDEBUG
  bool check_termination = false;
#else
  bool check_termination = true;
#endif
};

/// Called once per rewrite step with the stripped monomial p0 q0*, the
/// rewritten vertex v = r(p0), and the step's coefficient.  The wreath
/// product uses this hook to emit matrix units.
using RewriteEmit = std::function<void(int vertex, const Path& p0, const Path& q0,
                                       const Scalar& coeff)>;

/// Fully rewrites x modulo the relations CK(v)' = 0:
///   (p0 g)(q0 g)* -> p0 q0* - sum_{f in s^-1(v), f != g} (p0 f)(q0 f)*
/// for g = gamma(v).  Terminates; the result is strategy-independent.
CohnElement rewrite_normal_form(CohnElement x, const RewriteOptions& opt = {},
                                const RewriteEmit& emit = nullptr);

/// Element of L(Gamma) = C(Gamma)/N, stored as the rewriting normal form of
/// a representative.
class LeavittElement {
public:
  /// lpa_normal_form: normalizes on construction.
  explicit LeavittElement(CohnElement x, const RewriteOptions& opt = {});

  static LeavittElement zero(GraphPtr g, Field f);
  static LeavittElement vertex(GraphPtr g, Field f, int v);
  static LeavittElement edge(GraphPtr g, Field f, int e);
  static LeavittElement edge_star(GraphPtr g, Field f, int e);

  const CohnElement& cohn() const { return val_; }
  const GraphPtr& graph() const { return val_.graph(); }
  const Field& field() const { return val_.field(); }
  bool is_zero() const { return val_.is_zero(); }

  LeavittElement operator+(const LeavittElement& o) const;
  LeavittElement operator-(const LeavittElement& o) const;
  LeavittElement operator-() const;
  LeavittElement scaled(const Scalar& s) const;
  bool operator==(const LeavittElement& o) const { return val_ == o.val_; }
  bool operator!=(const LeavittElement& o) const { return !(*this == o); }

  LeavittElement graded_component(long n) const;
  std::string str() const { return val_.str(); }

private:
  CohnElement val_;
};

LeavittElement lpa_mul(const LeavittElement& x, const LeavittElement& y);

/// Graded simplicity criterion: no proper nonzero hereditary saturated
/// subsets, i.e. enumerate_hsat(g) = [{}, V].
bool graded_simple(const Graph& g, int max_vertices = 16);

} // namespace lpwr

#endif
