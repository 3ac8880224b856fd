#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qps/graph.hpp"
#include "qps/phi_algebra.hpp"

namespace qps {

/// A partition of the edge indices into classes.
struct EdgePartition {
  std::vector<std::vector<EdgeIndex>> classes;

  static EdgePartition single_class(std::size_t m);
  static EdgePartition singletons(std::size_t m);
  /// All edges but `distinguished` in one class, `distinguished` alone.
  static EdgePartition one_off(std::size_t m, EdgeIndex distinguished);

  /// "1-3,5;4,6" (1-based indices; classes split by ';' or '|'), or one of the
  /// keywords "all", "singletons", "one-off" (last edge distinguished).
  static EdgePartition parse(std::string_view spec, std::size_t m);

  /// Throws InvalidInput unless every edge lies in exactly one nonempty class.
  void validate(std::size_t m) const;
  std::string to_string() const;
};

enum class CensusKind { kAll, kRootConnected, kStronglyConnected };

struct CensusMode {
  CensusKind kind = CensusKind::kAll;
  Vertex root = 0;

  static CensusMode all() { return {CensusKind::kAll, 0}; }
  static CensusMode root_connected(Vertex root) { return {CensusKind::kRootConnected, root}; }
  static CensusMode strongly_connected() { return {CensusKind::kStronglyConnected, 0}; }
  static CensusMode matching(QuotientMode mode);
  QuotientMode quotient() const;
};

struct CensusOptions {
  std::size_t max_edges = kDefaultMaxEdges;
  bool collect_vectors = false;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct ScoreCensus {
  CensusMode mode;
  std::uint64_t count = 0;
  /// Distinct score vectors in lexicographic order, when requested.
  std::vector<std::vector<Rational>> vectors;
};

/// Distinct score vectors over all orientations passing the mode predicate.
ScoreCensus score_census(const Graph& g, const WeightAssignment& q, CensusMode mode, const CensusOptions& options = {});

struct ForestCheck {
  std::uint64_t forests = 0;
  std::uint64_t indegree_vectors = 0;
  bool passed() const noexcept { return forests == indegree_vectors; }
};

/// Spanning forests versus distinct unit-weight indegree vectors.
ForestCheck indegree_forest_check(const Graph& g, std::size_t max_edges = kDefaultOracleEdgeCap);

/// Product over classes of the number of forests inside the class.
std::uint64_t partition_product_oracle(const Graph& g, const EdgePartition& partition,
                                       std::size_t max_edges = kDefaultOracleEdgeCap);

/// Integer representatives of the weights: q_e * scale / content, exact and sign-preserving.
struct ScaledWeights {
  std::vector<std::int64_t> w;
  Rational unit;  ///< q_e = w_e * unit
};
/// Throws CapExceeded if the scaled magnitudes do not leave 64-bit headroom for sums.
ScaledWeights scale_weights(const WeightAssignment& q);

}  // namespace qps
