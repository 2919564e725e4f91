#ifndef LPWR_COHN_HPP
#define LPWR_COHN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpwr/graph.hpp"
#include "lpwr/scalar.hpp"

namespace lpwr {

/// Monomial p q* with r(p) = r(q).
struct Mono {
  Path p, q;
  /// deg(p q*) = len(p) - len(q).
  long degree() const {
    return static_cast<long>(p.length()) - static_cast<long>(q.length());
  }
  bool operator==(const Mono& o) const { return p == o.p && q == o.q; }
};

/// Canonical monomial order: (degree, len(p), edge names of p, edge names
/// of q, source vertices).  Keeps printed elements and golden files stable.
bool mono_less(const Graph& g, const Mono& a, const Mono& b);

struct MonoCmp {
  const Graph* g = nullptr;
  bool operator()(const Mono& a, const Mono& b) const { return mono_less(*g, a, b); }
};

/// Element of the path semigroup S = { pq* } U {0}.
struct SGElement {
  std::optional<Mono> m; // nullopt = the semigroup zero

  static SGElement zero() { return SGElement{std::nullopt}; }
  static SGElement of(Mono mono) { return SGElement{std::move(mono)}; }
  bool is_zero() const { return !m.has_value(); }
};

SGElement sg_make(const Graph& g, Path p, Path q);
/// Semigroup product (pq*)(rs*) in C(Gamma):
///   (p r1) s*  when r = q r1,  p (s q1)*  when q = r q1,  0 otherwise.
SGElement sg_mul(const Graph& g, const SGElement& x, const SGElement& y);
SGElement sg_star(const SGElement& x);
std::string sg_str(const Graph& g, const SGElement& x);

/// Element of the Cohn algebra C(Gamma) = reduced semigroup algebra F0[S]:
/// a finite scalar combination of non-zero monomials pq*.  Zero coefficients
/// are never stored.
class CohnElement {
public:
  using TermMap = std::map<Mono, Scalar, MonoCmp>;

  CohnElement(GraphPtr g, Field f);

  static CohnElement zero(GraphPtr g, Field f) { return CohnElement(g, f); }
  static CohnElement vertex(GraphPtr g, Field f, int v);
  static CohnElement edge(GraphPtr g, Field f, int e);
  static CohnElement edge_star(GraphPtr g, Field f, int e);
  static CohnElement monomial(GraphPtr g, Field f, Mono m, Scalar c);

  const GraphPtr& graph() const { return graph_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Accumulates c * m, dropping the term if the coefficient cancels.
  void add_term(const Mono& m, const Scalar& c);
  Scalar coeff(const Mono& m) const;

  CohnElement operator+(const CohnElement& o) const;
  CohnElement operator-(const CohnElement& o) const;
  CohnElement operator-() const;
  CohnElement scaled(const Scalar& s) const;
  bool operator==(const CohnElement& o) const;
  bool operator!=(const CohnElement& o) const { return !(*this == o); }

  /// Sum of monomials of degree n.
  CohnElement graded_component(long n) const;
  std::string str() const;

private:
  GraphPtr graph_;
  Field field_;
  TermMap terms_;
};

/// Bilinear extension of sg_mul; associative, no CK relations applied.
CohnElement cohn_mul(const CohnElement& x, const CohnElement& y);
/// The involution: linear extension of (pq*)* = qp*.
CohnElement star(const CohnElement& x);

/// CK(v)' = v - sum_{f in s^-1(v)} f f*; v must not be a sink.
CohnElement ck_prime(GraphPtr g, Field f, int v);

// -- linear independence of p CK(v)' q* families ------------------------------

struct Lemma5Family {
  int vertex; // v_i, non-sink
  std::vector<std::pair<Path, Path>> pq; // p_ik, q_ik (lengths >= 1, range v_i)
  std::vector<Path> p_left;              // p'_is (length >= 1, range v_i)
  std::vector<Path> q_right;             // q'_it (length >= 1, range v_i)
  bool include_plain = false;            // the bare CK(v_i)' term
};

/// Expands every term of the families in the S-basis and decides by exact
/// rank whether a vanishing linear combination forces all coefficients to
/// zero.  Hypothesis violations (duplicates, wrong ranges, sink vertices,
/// short paths) throw std::invalid_argument.
bool lemma5_verify(GraphPtr g, Field f, const std::vector<Lemma5Family>& families);

} // namespace lpwr

#endif
