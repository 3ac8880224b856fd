#pragma once

#include <cstddef>

#include "qps/graph.hpp"
#include "qps/polynomial.hpp"

namespace qps {

enum class HilbertVariant { kExternal, kTrees, kInternal };

/// Tutte polynomial by memoized deletion-contraction on a multiplicity representation.
BivariatePolynomial tutte_polynomial(const Graph& g);

inline constexpr std::size_t kRankNullityEdgeCap = 16;

/// Subset expansion sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)). Throws CapExceeded above max_edges.
BivariatePolynomial tutte_rank_nullity_oracle(const Graph& g, std::size_t max_edges = kRankNullityEdgeCap);

/// T(1+t, 1/t), T(1, 1/t) or T(0, 1/t) times t^(m-n+c).
/// Trees and internal variants require a connected graph.
HilbertPolynomial hilbert_from_tutte(const Graph& g, HilbertVariant variant);
HilbertPolynomial hilbert_from_tutte(const Graph& g, const BivariatePolynomial& tutte, HilbertVariant variant);

}  // namespace qps
