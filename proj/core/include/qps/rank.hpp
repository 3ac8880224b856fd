#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qps/rational.hpp"

namespace qps {

/// Deterministic Miller-Rabin for 32-bit inputs.
bool is_prime(std::uint32_t n);
/// The k-th prime below `below` in descending order (k = 0 is the largest).
std::uint32_t prime_below(std::uint32_t below, std::size_t k);

/// Arithmetic modulo a prime p < 2^32.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inverse(std::uint32_t a) const;
  /// How many products (p-1)^2 can be added to a reduced value without overflowing 64 bits.
  std::uint64_t lazy_budget() const noexcept { return budget_; }

 private:
  std::uint32_t p_;
  std::uint64_t budget_;
};

/// Row-echelon store over GF(p). Rows are normalised to pivot 1 and are zero before
/// their pivot; the pivot is the first nonzero coordinate.
class ModularRankAccumulator {
 public:
  ModularRankAccumulator(PrimeField field, std::size_t length);

  /// Reduces v against the stored rows; stores it if independent.
  bool insert(std::span<const std::uint32_t> v);
  /// Same outcome as inserting the vectors one by one, in order; the stored rows are
  /// streamed once per batch instead of once per vector.
  std::vector<bool> insert_batch(std::span<const std::span<const std::uint32_t>> vs);
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t length() const noexcept { return length_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  // Eliminates rows [first, last) from the reduced scratch vector s; returns true if a row was stored.
  bool finish_insert(std::uint64_t* s, std::size_t first_row);

  PrimeField field_;
  std::size_t length_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> batch_scratch_;
};

/// Row-echelon store of rational vectors, kept as primitive integer rows
/// (fraction-free elimination; the span over Q is what matters).
class RationalRankAccumulator {
 public:
  explicit RationalRankAccumulator(std::size_t length);

  bool insert(std::span<const Rational> v);
  bool insert_integer(std::vector<BigInt> v);
  std::size_t rank() const noexcept { return pivots_.size(); }
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t length_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace qps
