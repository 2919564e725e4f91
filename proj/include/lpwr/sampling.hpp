#ifndef LPWR_SAMPLING_HPP
#define LPWR_SAMPLING_HPP

#include <random>

#include "lpwr/action.hpp"
#include "lpwr/cohn.hpp"
#include "lpwr/extgraph.hpp"

namespace lpwr {

/// Deterministic random generators for property tests and probes.  All of
/// them draw exclusively from the supplied engine, so a fixed seed pins the
/// whole sample sequence.

Path sample_path(const Graph& g, std::mt19937_64& rng, int max_len);
/// Random monomial pq* (common range found by a backward walk).
Mono sample_mono(const Graph& g, std::mt19937_64& rng, int max_len);
CohnElement sample_cohn(const GraphPtr& g, Field f, std::mt19937_64& rng,
                        int max_terms, int max_len);
/// Random bridge path of length <= max_len, or x0 when none exists.
BridgePath sample_bridge_path(const ExtendedGraph& eg, std::mt19937_64& rng,
                              int max_len);
ActionElement sample_action_element(const ExtendedGraphPtr& eg, std::mt19937_64& rng);

} // namespace lpwr

#endif
