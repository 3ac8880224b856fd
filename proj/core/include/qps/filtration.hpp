#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qps/phi_algebra.hpp"
#include "qps/polynomial.hpp"
#include "qps/score_census.hpp"

namespace qps {

enum class FieldKind { kRational, kPrime };

struct FieldSpec {
  FieldKind kind = FieldKind::kRational;
  std::uint32_t prime = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec prime_field(std::uint32_t p);
  /// "rational" or "prime:P".
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// How ranks over Q are obtained.
enum class RationalEngine {
  kAuto,       ///< direct below FiltrationOptions::direct_limit coordinates, certified above
  kDirect,     ///< fraction-free elimination over the integers
  kCertified,  ///< ranks modulo many primes, certified by a Hadamard bound
};

enum class Representation {
  kAuto,      ///< tilde coordinates when all weights are nonzero
  kTilde,     ///< coordinatewise product over orientations
  kMonomial,  ///< square-free edge monomials u_A (needed for zero weights)
};

struct FiltrationOptions {
  FieldSpec field;
  RationalEngine engine = RationalEngine::kAuto;
  std::size_t direct_limit = 128;
  Representation representation = Representation::kAuto;
};

struct FiltrationResult {
  std::vector<std::int64_t> dims;  ///< dim F_0, dim F_1, ..., ending with one repeated value
  HilbertPolynomial hilbert;
  std::int64_t total_dim = 0;
  FieldSpec field;
  std::string engine;
  std::size_t coordinates = 0;  ///< length of the coordinate vectors after merging duplicates
  std::size_t primes_used = 0;
};

FiltrationResult filtration_hilbert(const AlgebraContext& ctx, QuotientMode mode = QuotientMode::external(),
                                    const FiltrationOptions& options = {});

/// Final dimension only (cheaper to certify than the full filtration).
std::int64_t total_dimension(const AlgebraContext& ctx, QuotientMode mode = QuotientMode::external(),
                             const FiltrationOptions& options = {});

/// Dimension of the subalgebra generated by the single element X.t.
std::int64_t single_element_dimension(const AlgebraContext& ctx, const std::vector<Rational>& t,
                                      const FiltrationOptions& options = {});

struct Annihilator {
  std::vector<Rational> roots;         ///< distinct, ascending
  std::vector<Rational> coefficients;  ///< monic, ascending powers
  std::size_t degree() const noexcept { return roots.size(); }
  /// Factored form, e.g. "X(X - 1)(X - 2)".
  std::string factored(std::string_view var = "X") const;
  /// Expanded form, e.g. "X^3 - 3X^2 + 2X".
  std::string expanded(std::string_view var = "X") const;
};

/// Minimal polynomial of X.t = sum t_i X_i, verified to annihilate and to be minimal.
/// Throws CrossCheckFailure if either verification fails.
Annihilator min_annihilating_polynomial(const AlgebraContext& ctx, const std::vector<Rational>& t);

struct HeckeFailure {
  VertexSet subset = 0;
  int k_min = 0;
  int k_max = 0;
};

struct HeckeReport {
  std::size_t subsets_checked = 0;
  std::vector<HeckeFailure> failures;
  bool ok() const noexcept { return failures.empty(); }
};

inline constexpr std::size_t kMaxSubsetVertices = 16;

/// For each relevant vertex subset I, checks prod_k (sum_{i in I} X_i - qk) = 0 in the
/// (projected) algebra with all weights q. Ranges of k:
///   external: nonempty I,              k in [-down_I, up_I]
///   trees:    nonempty I without root, k in [-down_I, up_I - 1]
///   internal: nonempty proper I,       k in [-down_I + 1, up_I - 1]
HeckeReport verify_hecke_relations(const Graph& g, const Rational& q, QuotientMode mode,
                                   std::size_t max_edges = kDefaultMaxEdges);

struct SamplerOptions {
  std::uint64_t initial_range = 1000;
  std::uint64_t range_growth = 1000;
  int max_attempts = 4;
};

/// Positive integer weight per class from [1, range]. Two independent draws must give the
/// same score-vector count; otherwise the range grows and sampling repeats.
WeightAssignment sample_generic_weights(const Graph& g, const EdgePartition& partition, std::uint64_t seed,
                                        const SamplerOptions& options = {});

}  // namespace qps
