#include "qps/phi_algebra.hpp"

#include <bit>
#include <span>
#include <string>

#include "qps/errors.hpp"
#include "qps/subset_transform.hpp"

namespace qps {

AlgebraContext::AlgebraContext(Graph g, WeightAssignment q, ContextOptions options)
    : g_(std::move(g)), q_(std::move(q)), options_(options) {
  if (q_.size() != g_.edge_count()) {
    throw InvalidInput("expected " + std::to_string(g_.edge_count()) + " weights, got " + std::to_string(q_.size()));
  }
  if (g_.edge_count() > options_.max_edges) {
    throw CapExceeded("graph has " + std::to_string(g_.edge_count()) + " edges; the cap is " +
                      std::to_string(options_.max_edges) + " (raise it with --max-edges)");
  }
  nonzero_ = q_.all_nonzero();
  if (!nonzero_ && !options_.allow_zero_weights) {
    throw InvalidInput("zero edge weight; only the experimental zero-weight mode accepts it");
  }
  offsets_.assign(g_.vertex_count(), Rational(0));
  for (EdgeIndex e = 0; e < g_.edge_count(); ++e) offsets_[g_.edge(e).hi] += q_[e];
}

void AlgebraContext::require_tilde() const {
  if (!nonzero_) throw InvalidInput("tilde coordinates need every weight to be nonzero");
}

// ---------------------------------------------------------------------------

TildeVector::TildeVector(std::size_t edge_count)
    : m_(edge_count), coords_(std::size_t{1} << edge_count, Rational(0)) {}

TildeVector::TildeVector(std::size_t edge_count, std::vector<Rational> coords)
    : m_(edge_count), coords_(std::move(coords)) {
  if (coords_.size() != (std::size_t{1} << m_)) throw InvalidInput("tilde vector length must be 2^m");
}

TildeVector TildeVector::constant(std::size_t edge_count, const Rational& c) {
  TildeVector v(edge_count);
  for (auto& x : v.coords_) x = c;
  return v;
}

bool TildeVector::is_zero() const {
  for (const auto& x : coords_)
    if (x != 0) return false;
  return true;
}

void TildeVector::check_same_shape(const TildeVector& other) const {
  if (m_ != other.m_) throw InvalidInput("tilde vectors over different edge counts");
}

TildeVector& TildeVector::operator+=(const TildeVector& other) {
  check_same_shape(other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

TildeVector& TildeVector::operator-=(const TildeVector& other) {
  check_same_shape(other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

TildeVector& TildeVector::operator*=(const TildeVector& other) {
  check_same_shape(other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] *= other.coords_[k];
  return *this;
}

TildeVector& TildeVector::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

TildeVector to_tilde(const AlphaCoefficients& alpha, std::size_t edge_count) {
  TildeVector v(edge_count);
  for (const auto& [mask, c] : alpha) {
    if (mask >= v.size()) throw InvalidInput("alpha coefficient indexed outside the edge set");
    v[mask] += c;
  }
  std::vector<Rational> coords = v.coords();
  zeta_transform(std::span<Rational>(coords));
  return TildeVector(edge_count, std::move(coords));
}

AlphaCoefficients from_tilde(const TildeVector& v) {
  std::vector<Rational> coords = v.coords();
  mobius_transform(std::span<Rational>(coords));
  AlphaCoefficients out;
  for (std::size_t mask = 0; mask < coords.size(); ++mask)
    if (coords[mask] != 0) out.emplace(mask, coords[mask]);
  return out;
}

TildeVector edge_element(const AlgebraContext& ctx, EdgeIndex e) {
  ctx.require_tilde();
  return to_tilde({{EdgeSet{1} << e, ctx.weights()[e]}}, ctx.edge_count());
}

TildeVector generator_X(const AlgebraContext& ctx, Vertex i) {
  ctx.require_tilde();
  const Graph& g = ctx.graph();
  if (i >= g.vertex_count()) throw InvalidInput("vertex out of range");

  AlphaCoefficients alpha;
  for (EdgeIndex e : g.incident(i)) alpha[EdgeSet{1} << e] += g.sign(i, e) * ctx.weights()[e];
  TildeVector direct = to_tilde(alpha, ctx.edge_count());

  // score form: D+(i) at the orientation minus the offset
  TildeVector by_score(ctx.edge_count());
  const Rational& offset = ctx.score_offset(i);
  for (EdgeSet mask = 0; mask < by_score.size(); ++mask) {
    Rational d = 0;
    for (EdgeIndex e : g.incident(i))
      if (Orientation{mask}.head(g, e) == i) d += ctx.weights()[e];
    by_score[mask] = d - offset;
  }
  if (!(direct == by_score)) {
    throw CrossCheckFailure("generator X_" + std::to_string(i + 1) + ": subset-sum and score formulas disagree");
  }
  return direct;
}

Rational cut_element_scale(const AlgebraContext& ctx, VertexSet subset) {
  auto cut = cut_data(ctx.graph(), subset);
  Rational s = 1;
  for (EdgeSet t = cut.up_edges; t; t &= t - 1) s *= ctx.weights()[std::countr_zero(t)];
  for (EdgeSet t = cut.down_edges; t; t &= t - 1) s *= -ctx.weights()[std::countr_zero(t)];
  return s;
}

TildeVector cut_element_f(const AlgebraContext& ctx, VertexSet subset) {
  ctx.require_tilde();
  const std::size_t m = ctx.edge_count();
  auto cut = cut_data(ctx.graph(), subset);

  TildeVector f = TildeVector::unit(m);
  for (EdgeSet t = cut.up_edges; t; t &= t - 1) f *= edge_element(ctx, std::countr_zero(t));
  for (EdgeSet t = cut.down_edges; t; t &= t - 1) {
    EdgeIndex e = std::countr_zero(t);
    f *= edge_element(ctx, e) - TildeVector::constant(m, ctx.weights()[e]);
  }

  const Rational scale = cut_element_scale(ctx, subset);
  const EdgeSet cut_mask = cut.up_edges | cut.down_edges;
  for (EdgeSet mask = 0; mask < f.size(); ++mask) {
    Rational expected = (mask & cut_mask) == cut.up_edges ? scale : Rational(0);
    if (f[mask] != expected) {
      throw CrossCheckFailure("cut element f_I disagrees with its coordinate pattern at mask " + std::to_string(mask));
    }
  }
  return f;
}

void check_mode(const Graph& g, QuotientMode mode) {
  if (mode.kind == AlgebraKind::kExternal) return;
  if (!g.is_connected()) throw InvalidInput("tree and internal algebras need a connected graph");
  if (mode.kind == AlgebraKind::kTrees && mode.root >= g.vertex_count()) throw InvalidInput("root out of range");
}

ModeFilter::ModeFilter(const Graph& g, QuotientMode mode) : mode_(mode), oracle_(g) { check_mode(g, mode); }

bool ModeFilter::keeps(Orientation o) const {
  switch (mode_.kind) {
    case AlgebraKind::kExternal:
      return true;
    case AlgebraKind::kTrees:
      return oracle_.all_reach(o, mode_.root);
    case AlgebraKind::kInternal:
      return oracle_.strongly_connected(o);
  }
  return false;
}

TildeVector project_quotient(const AlgebraContext& ctx, const TildeVector& v, QuotientMode mode) {
  ctx.require_tilde();
  if (v.edge_count() != ctx.edge_count()) throw InvalidInput("vector does not belong to this context");
  ModeFilter filter(ctx.graph(), mode);
  TildeVector out = v;
  for (EdgeSet mask = 0; mask < out.size(); ++mask)
    if (!filter.keeps(Orientation{mask})) out[mask] = 0;
  return out;
}

}  // namespace qps
