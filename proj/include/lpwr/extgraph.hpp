#ifndef LPWR_EXTGRAPH_HPP
#define LPWR_EXTGRAPH_HPP

#include <memory>
#include <string>
#include <vector>

#include "lpwr/coeff.hpp"
#include "lpwr/cohn.hpp"
#include "lpwr/graph.hpp"

namespace lpwr {

/// Specification of one bridge edge from a base-graph vertex into the
/// idempotent family of the coefficient algebra.
struct BridgeSpec {
  std::string name;
  std::string src_vertex;
  std::string idem_name;
};

/// The extended graph: the base graph Gamma plus bridge edges E(V, E) into
/// the designated idempotents of a coefficient algebra.  Bridges are not
/// allowed at sinks, and bridge names share the base graph's identifier
/// namespace.
class ExtendedGraph {
public:
  struct Bridge {
    std::string name;
    int src;          // base-graph vertex
    std::string idem; // idempotent name in the coefficient algebra
  };

  ExtendedGraph(GraphPtr base, CoeffAlgebraPtr coeff,
                const std::vector<BridgeSpec>& bridges);

  /// Parses the extension file format:
  ///   idem <name>
  ///   bridge <edge-id> <vertex-id> <idem-name>
  static std::vector<BridgeSpec> parse_extension(std::string_view text);

  const GraphPtr& base() const { return base_; }
  const CoeffAlgebraPtr& coeff() const { return coeff_; }
  const Field& field() const { return field_; }

  int bridge_count() const { return static_cast<int>(bridges_.size()); }
  const Bridge& bridge(int b) const { return bridges_.at(static_cast<std::size_t>(b)); }
  int find_bridge(std::string_view name) const;
  /// Out-bridges of a base vertex, sorted by bridge name.
  const std::vector<int>& out_bridges(int v) const {
    return out_.at(static_cast<std::size_t>(v));
  }
  /// r(e) for a bridge: the bound idempotent of A.
  const AlgElem& bridge_range(int b) const {
    return ranges_.at(static_cast<std::size_t>(b));
  }

private:
  GraphPtr base_;
  CoeffAlgebraPtr coeff_;
  Field field_;
  std::vector<Bridge> bridges_;
  std::vector<AlgElem> ranges_;
  std::vector<std::vector<int>> out_;
};

using ExtendedGraphPtr = std::shared_ptr<const ExtendedGraph>;

ExtendedGraphPtr extend_graph(GraphPtr base, CoeffAlgebraPtr coeff,
                              const std::vector<BridgeSpec>& bridges);

/// Element of P: either the distinguished zero x0, or a base-graph path
/// followed by one bridge edge.
struct BridgePath {
  Path prefix;     // path in the base graph (ignored for x0)
  int bridge = -1; // -1 = x0

  static BridgePath x0() { return BridgePath{}; }
  bool is_x0() const { return bridge < 0; }
  /// len(prefix) + 1; 0 for x0.
  std::size_t length() const { return is_x0() ? 0 : prefix.length() + 1; }
  bool operator==(const BridgePath& o) const {
    if (is_x0() || o.is_x0()) return is_x0() && o.is_x0();
    return bridge == o.bridge && prefix == o.prefix;
  }
};

BridgePath make_bridge_path(const ExtendedGraph& eg, Path prefix, int bridge);
bool bridge_path_valid(const ExtendedGraph& eg, const BridgePath& x);
/// Deterministic order: x0 first, then by length, prefix edge names, bridge name.
bool bridge_path_less(const ExtendedGraph& eg, const BridgePath& a, const BridgePath& b);
std::string bridge_path_str(const ExtendedGraph& eg, const BridgePath& x);
/// r(x) in A: the bridge's idempotent, or 1 for x0 (r(0) = 1).
AlgElem bridge_path_range(const ExtendedGraph& eg, const BridgePath& x);

/// x0 followed by all p.e with len(p) + 1 <= max_len (max_len >= 1).
std::vector<BridgePath> enumerate_bridge_paths(const ExtendedGraph& eg, int max_len);

enum class Side { Left, Right };

/// The two-sided S-action on P: left is evaluation of s.x in C(Gamma~);
/// right is x.s = s* x.  Always lands in P since C(Gamma) P <= P.
BridgePath act(const ExtendedGraph& eg, const SGElement& s, const BridgePath& x, Side side);

} // namespace lpwr

#endif
