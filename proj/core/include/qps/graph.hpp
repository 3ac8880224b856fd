#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string_view>
#include <vector>

#include "qps/rational.hpp"

namespace qps {

/// Vertices are 0-based internally; files and the CLI use 1-based labels.
using Vertex = std::size_t;
using EdgeIndex = std::size_t;
/// Bitmask over vertices (bit i = vertex i).
using VertexSet = std::uint64_t;
/// Bitmask over edge indices.
using EdgeSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;
inline constexpr std::size_t kMaxEdgeBits = 63;

struct Edge {
  Vertex lo;  ///< smaller endpoint
  Vertex hi;  ///< larger endpoint
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless multigraph on vertices 0..n-1. Edge order is the input order.
class Graph {
 public:
  Graph() : Graph(1) {}
  explicit Graph(std::size_t n, std::vector<Edge> edges = {});

  /// Convenience: endpoints in any order, 0-based.
  static Graph from_pairs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs);
  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  /// c(i,e): +1 if i is the smaller endpoint, -1 if the larger, 0 otherwise.
  int sign(Vertex i, EdgeIndex e) const;

  /// Edges incident to i, in index order.
  const std::vector<EdgeIndex>& incident(Vertex i) const { return incident_.at(i); }

  /// Component label per vertex (labels 0..c-1 in order of smallest vertex).
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;
  bool is_connected() const { return component_count() == 1; }

  VertexSet all_vertices() const noexcept;
  EdgeSet all_edges() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

/// Exact rational weight per edge index.
struct WeightAssignment {
  std::vector<Rational> q;

  static WeightAssignment unit(std::size_t m) { return uniform(m, Rational(1)); }
  static WeightAssignment uniform(std::size_t m, const Rational& value);
  static WeightAssignment from_integers(const std::vector<long>& values);

  std::size_t size() const noexcept { return q.size(); }
  const Rational& operator[](EdgeIndex e) const { return q.at(e); }
  bool all_nonzero() const;
  bool is_uniform() const;
  friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

/// e in mask <=> edge e points from its larger endpoint to its smaller one.
struct Orientation {
  EdgeSet mask = 0;

  bool points_down(EdgeIndex e) const noexcept { return (mask >> e) & 1U; }
  Vertex head(const Graph& g, EdgeIndex e) const { return points_down(e) ? g.edge(e).lo : g.edge(e).hi; }
  Vertex tail(const Graph& g, EdgeIndex e) const { return points_down(e) ? g.edge(e).hi : g.edge(e).lo; }
};

/// Cut statistics of a vertex subset I.
struct CutData {
  VertexSet subset = 0;
  std::size_t d = 0;     ///< edges with exactly one endpoint in I
  std::size_t down = 0;  ///< cut edges whose endpoint in I is the larger one
  std::size_t up = 0;    ///< cut edges whose endpoint in I is the smaller one
  EdgeSet up_edges = 0;    ///< E(I, complement): c(i,e) = +1 for the endpoint i in I
  EdgeSet down_edges = 0;  ///< E(complement, I)
};

struct ParsedGraph {
  Graph graph;
  WeightAssignment weights;
  bool has_explicit_weights = false;
};

/// Graph file: first non-comment line is n, then "i j" or "i j q" lines (1-based).
/// Lines whose first non-blank character is '#' and blank lines are ignored.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::filesystem::path& path);
/// Inverse of parse_graph (always writes weights).
std::string format_graph(const Graph& g, const WeightAssignment& q);

CutData cut_data(const Graph& g, VertexSet subset);

std::vector<Rational> score_vector(const Graph& g, const WeightAssignment& q, Orientation o);

/// Every vertex has a directed path to root. Throws InvalidInput if g is disconnected.
bool is_root_connected(const Graph& g, Orientation o, Vertex root);
/// Throws InvalidInput if g is disconnected.
bool is_strongly_connected(const Graph& g, Orientation o);

/// Predicate evaluation without the connectivity precondition check, for hot loops.
class ReachabilityOracle {
 public:
  explicit ReachabilityOracle(const Graph& g);
  /// Vertices that can reach root.
  VertexSet reaching(Orientation o, Vertex root) const;
  /// Vertices reachable from root.
  VertexSet reachable(Orientation o, Vertex root) const;
  bool all_reach(Orientation o, Vertex root) const { return reaching(o, root) == all_; }
  bool strongly_connected(Orientation o) const;

 private:
  std::size_t n_;
  VertexSet all_;
  std::vector<Vertex> lo_, hi_;
};

inline constexpr std::size_t kDefaultOracleEdgeCap = 20;

/// Calls visit(F) for every acyclic edge subset. Throws CapExceeded above max_edges.
void for_each_forest(const Graph& g, const std::function<void(EdgeSet)>& visit,
                     std::size_t max_edges = kDefaultOracleEdgeCap);
std::uint64_t enumerate_forests(const Graph& g, std::size_t max_edges = kDefaultOracleEdgeCap);
/// Forests inside the given edge subset.
std::uint64_t count_forests_within(const Graph& g, EdgeSet allowed,
                                   std::size_t max_edges = kDefaultOracleEdgeCap);
/// Spanning trees of a connected graph. Throws InvalidInput if disconnected.
std::uint64_t enumerate_spanning_trees(const Graph& g, std::size_t max_edges = kDefaultOracleEdgeCap);

/// Subgraph with the given edges only (same vertex set).
Graph edge_subgraph(const Graph& g, EdgeSet edges);

}  // namespace qps
