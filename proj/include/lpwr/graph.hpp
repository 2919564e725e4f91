#ifndef LPWR_GRAPH_HPP
#define LPWR_GRAPH_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace lpwr {

/// Sorted set of vertex indices.
using VertexSet = std::vector<int>;

/// Finite directed multigraph.  Vertices and edges carry unique names (the
/// namespaces are shared); everything downstream identifies them by index.
/// Out-edge lists are kept sorted by edge name, which fixes the special-edge
/// choice and every deterministic enumeration order in the library.
class Graph {
public:
  struct Edge {
    std::string name;
    int src;
    int rng;
  };

  /// Parses the line-based graph format:
  ///   vertex <id>
  ///   edge <id> <source-id> <range-id>
  /// '#' starts a comment; errors mention the offending line.
  static Graph parse(std::string_view text);

  int add_vertex(const std::string& name);
  int add_edge(const std::string& name, int src, int rng);

  int vertex_count() const { return static_cast<int>(vnames_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vnames_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Index lookups; -1 when absent.
  int find_vertex(std::string_view name) const;
  int find_edge(std::string_view name) const;
  int vertex(std::string_view name) const; // throwing lookups
  int edge_by_name(std::string_view name) const;

  /// Out-edges of v sorted by edge name.
  const std::vector<int>& out_edges(int v) const { return out_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& in_edges(int v) const { return in_.at(static_cast<std::size_t>(v)); }
  bool is_sink(int v) const { return out_edges(v).empty(); }

  VertexSet all_vertices() const;
  VertexSet parse_vertex_set(std::string_view csv) const;
  std::string set_str(const VertexSet& w) const;

  bool operator==(const Graph& o) const;

private:
  std::vector<std::string> vnames_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
  std::map<std::string, int, std::less<>> vindex_, eindex_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Path p = e1...en with r(e_i) = s(e_{i+1}); a bare vertex is the path of
/// length 0 at that vertex.
struct Path {
  int src = -1;              // s(p)
  std::vector<int> edges;    // possibly empty

  static Path at(int vertex) { return Path{vertex, {}}; }
  std::size_t length() const { return edges.size(); }
  bool operator==(const Path& o) const { return src == o.src && edges == o.edges; }
};

int path_range(const Graph& g, const Path& p);
bool path_valid(const Graph& g, const Path& p);
/// True when a is a prefix of b (same source, leading edges agree).
bool path_is_prefix(const Path& a, const Path& b);
/// b with the prefix a removed; only valid when path_is_prefix(a, b).
Path path_strip_prefix(const Graph& g, const Path& a, const Path& b);
Path path_concat(const Graph& g, const Path& a, const Path& b);
Path path_append(const Graph& g, const Path& a, int edge);
std::string path_str(const Graph& g, const Path& p);
/// Deterministic path order: length, then edge names, then source vertex.
bool path_less(const Graph& g, const Path& a, const Path& b);

// -- hereditary / saturated machinery ---------------------------------------

struct HsatResult {
  bool hereditary;
  bool saturated;
};

/// W is hereditary iff every out-neighbour of a W-vertex is in W; saturated
/// iff every non-sink vertex whose out-neighbours all lie in W is in W.
HsatResult hereditary_saturated_check(const Graph& g, const VertexSet& w);

/// Least hereditary and saturated superset of w.
VertexSet hsat_closure(const Graph& g, const VertexSet& w);

/// All hereditary-saturated subsets (|V| <= max_vertices), sorted by size
/// then by contents.
std::vector<VertexSet> enumerate_hsat(const Graph& g, int max_vertices = 16);

/// Restriction Gamma(W) = (W, E(W,W)).
Graph restrict_graph(const Graph& g, const VertexSet& w);
/// Quotient Gamma/W = (V\W, E \ E(V,W)); requires W hereditary and saturated.
Graph quotient_graph(const Graph& g, const VertexSet& w);

/// The five balloon conditions for v over the nonempty subset w.
bool is_balloon(const Graph& g, int v, const VertexSet& w);

/// All paths of length <= max_len, ordered by path_less.
std::vector<Path> enumerate_paths(const Graph& g, int max_len);

} // namespace lpwr

#endif
