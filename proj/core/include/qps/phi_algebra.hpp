#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "qps/graph.hpp"
#include "qps/rational.hpp"

namespace qps {

inline constexpr std::size_t kDefaultMaxEdges = 24;

struct ContextOptions {
  std::size_t max_edges = kDefaultMaxEdges;
  /// Permit zero weights; tilde coordinates are then unavailable.
  bool allow_zero_weights = false;
};

/// A graph with exact weights, the setting for the algebra generated by the X_i.
class AlgebraContext {
 public:
  AlgebraContext(Graph g, WeightAssignment q, ContextOptions options = {});

  const Graph& graph() const noexcept { return g_; }
  const WeightAssignment& weights() const noexcept { return q_; }
  std::size_t edge_count() const noexcept { return g_.edge_count(); }
  std::size_t vertex_count() const noexcept { return g_.vertex_count(); }
  /// 2^m
  std::size_t dimension() const noexcept { return std::size_t{1} << g_.edge_count(); }
  bool tilde_defined() const noexcept { return nonzero_; }
  const ContextOptions& options() const noexcept { return options_; }

  /// Throws InvalidInput when some weight is zero.
  void require_tilde() const;

  std::vector<Rational> score(Orientation o) const { return score_vector(g_, q_, o); }

  /// sum of q_e over edges with c(i,e) = -1, i.e. edges where i is the larger endpoint.
  const Rational& score_offset(Vertex i) const { return offsets_.at(i); }

 private:
  Graph g_;
  WeightAssignment q_;
  ContextOptions options_;
  bool nonzero_;
  std::vector<Rational> offsets_;
};

using AlphaCoefficients = std::map<EdgeSet, Rational>;

/// Element of the algebra in coordinates where multiplication is coordinatewise.
/// Coordinate index = edge-subset bitmask.
class TildeVector {
 public:
  TildeVector() = default;
  /// Zero vector over m edges.
  explicit TildeVector(std::size_t edge_count);
  TildeVector(std::size_t edge_count, std::vector<Rational> coords);

  static TildeVector unit(std::size_t edge_count) { return constant(edge_count, Rational(1)); }
  static TildeVector constant(std::size_t edge_count, const Rational& c);

  std::size_t edge_count() const noexcept { return m_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](EdgeSet mask) const { return coords_[mask]; }
  Rational& operator[](EdgeSet mask) { return coords_[mask]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  TildeVector& operator+=(const TildeVector& other);
  TildeVector& operator-=(const TildeVector& other);
  /// Hadamard product.
  TildeVector& operator*=(const TildeVector& other);
  TildeVector& operator*=(const Rational& c);

  friend TildeVector operator+(TildeVector a, const TildeVector& b) { return a += b; }
  friend TildeVector operator-(TildeVector a, const TildeVector& b) { return a -= b; }
  friend TildeVector operator*(TildeVector a, const TildeVector& b) { return a *= b; }
  friend TildeVector operator*(TildeVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const TildeVector& a, const TildeVector& b) { return a.m_ == b.m_ && a.coords_ == b.coords_; }

 private:
  void check_same_shape(const TildeVector& other) const;

  std::size_t m_ = 0;
  std::vector<Rational> coords_{Rational(0)};
};

/// Zeta transform over the subset lattice of m edges.
TildeVector to_tilde(const AlphaCoefficients& alpha, std::size_t edge_count);
/// Moebius inversion; only nonzero coefficients are returned.
AlphaCoefficients from_tilde(const TildeVector& v);

/// Tilde form of u_e (= q_e * alpha_e).
TildeVector edge_element(const AlgebraContext& ctx, EdgeIndex e);

/// X_i = sum_e c(i,e) u_e. Computed by two formulas, which are checked against each other.
TildeVector generator_X(const AlgebraContext& ctx, Vertex i);

/// f_I = prod_{E(I,I^c)} u_e * prod_{E(I^c,I)} (u_e - q_e), built by Hadamard products
/// and checked against its closed-form 0/1 pattern.
TildeVector cut_element_f(const AlgebraContext& ctx, VertexSet subset);
/// The scalar multiplying the 0/1 pattern of f_I.
Rational cut_element_scale(const AlgebraContext& ctx, VertexSet subset);

enum class AlgebraKind { kExternal, kTrees, kInternal };

struct QuotientMode {
  AlgebraKind kind = AlgebraKind::kExternal;
  Vertex root = 0;

  static QuotientMode external() { return {AlgebraKind::kExternal, 0}; }
  static QuotientMode trees(Vertex root) { return {AlgebraKind::kTrees, root}; }
  static QuotientMode internal() { return {AlgebraKind::kInternal, 0}; }
};

/// Zeroes the coordinates of orientations that are not root-connected (trees)
/// or not strongly connected (internal). External mode returns v unchanged.
TildeVector project_quotient(const AlgebraContext& ctx, const TildeVector& v, QuotientMode mode);

/// Validates the mode against the graph (connectivity, root range).
void check_mode(const Graph& g, QuotientMode mode);

/// Predicate deciding which orientations survive the projection.
class ModeFilter {
 public:
  ModeFilter(const Graph& g, QuotientMode mode);
  bool keeps(Orientation o) const;

 private:
  QuotientMode mode_;
  ReachabilityOracle oracle_;
};

}  // namespace qps
