#ifndef LPWR_PROBES_HPP
#define LPWR_PROBES_HPP

#include "lpwr/affinization.hpp"
#include "lpwr/report.hpp"
#include "lpwr/wreath.hpp"

namespace lpwr {

/// The small graphs every suite exercises: a loop, a line u -> v, the
/// Toeplitz graph (loop c at u plus f: u -> v), a 2-cycle, and a 3-vertex
/// chain with a loop at the top.
struct SampleGraphs {
  GraphPtr loop, line, toeplitz, two_cycle, three_vertex;
  std::vector<std::pair<std::string, GraphPtr>> all() const;
};
SampleGraphs sample_graphs();

/// Named extended-graph instances: the loop and Toeplitz graphs over the
/// field, plus the two wreath contexts arising from hereditary saturated
/// subsets (Toeplitz/{v} and the 3-vertex graph over its closure).
std::vector<std::pair<std::string, ExtendedGraphPtr>> sample_extended_graphs(Field f);

/// The eight Cohn relation families, exhaustively over generators.
Report probe_cohn_relations(const GraphPtr& g, Field f);

/// Associativity of F0[S] + M_{XxX}(A): random triples on
/// every sample biset plus the corrupted negative control (which must fail).
Report probe_associativity(Field f, int samples, std::uint64_t seed);

/// Action closure and biset properties (1),(2), exhaustive for
/// len(s) <= 2*path_len, len(x) <= path_len on every sample instance.
Report probe_actions(Field f, int path_len);

/// Rewriting health: per-step termination measure, strategy independence on
/// random elements, idempotence, product compatibility, N-membership, and
/// the loop normal-form basis in the degree window [-3, 3].
Report probe_rewriting(Field f, int samples, std::uint64_t seed);

/// CK(v) annihilates the matrix ideal on both sides, exactly, for matrix
/// units with index length <= max_index and random corner entries.
Report probe_ck_annihilation(Field f, int max_index, std::uint64_t seed);

/// Random elements of the ideal J reduce to exactly zero.
Report probe_j_reduction(Field f, int samples, std::uint64_t seed);

/// The Leavitt-part projection is multiplicative (B/I = L(Gamma)), and the
/// matrix ideal is closed under products with corners preserved.
Report probe_quotient_structure(Field f, int samples, std::uint64_t seed);

/// prop1_check on the loop wreath over F[x] with generator {x}.
Report probe_prop1(Field f, int max_index, int max_word, int word_cap);

/// The six displayed loop-wreath relations under the live index convention,
/// plus the "not a subalgebra" witness.
Report probe_loop_relations(Field f, std::uint64_t seed);

/// Quasi-inverses in A0 and M_n(A0), and the non-nilpotence witness
/// (t)_{0,0}^n != 0 for n <= power_bound.
Report probe_radical(Field f, int element_samples, int matrix_samples,
                     int power_bound, std::uint64_t seed);

} // namespace lpwr

#endif
