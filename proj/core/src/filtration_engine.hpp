#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "qps/rank.hpp"
#include "qps/rational.hpp"

namespace qps::detail {

/// An integer realisation of a filtered algebra: a unit vector and generators acting
/// linearly on Z^length. Monomial vectors are the images of the unit.
class FiltrationSystem {
 public:
  virtual ~FiltrationSystem() = default;
  virtual std::size_t length() const = 0;
  virtual std::size_t generator_count() const = 0;

  virtual void unit(std::span<std::uint32_t> out, const PrimeField& f) const = 0;
  virtual void multiply(std::size_t gen, std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
                        const PrimeField& f) const = 0;
  virtual void unit(std::span<BigInt> out) const = 0;
  virtual void multiply(std::size_t gen, std::span<const BigInt> in, std::span<BigInt> out) const = 0;

  /// log2 of an upper bound on the Euclidean norm of any monomial vector of this degree.
  virtual long double log2_norm_bound(std::size_t degree) const = 0;

  /// log2 of an upper bound on the product of the s largest row norms among all monomials
  /// of degree <= k, i.e. on |any s x s minor| of the monomial matrix M_k.
  virtual long double minor_bound_bits(std::size_t s, std::size_t k) const;
};

/// Coordinates where generators act by pointwise multiplication. Duplicate coordinate
/// tuples are merged (rank-preserving), generators are centred and divided by their content,
/// and generators that become zero are dropped.
class ColumnSystem final : public FiltrationSystem {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t generators) : g_(generators) {}
    void add(std::span<const std::int64_t> values);
    std::size_t distinct() const noexcept { return index_.size(); }
    ColumnSystem finish() &&;

   private:
    std::size_t g_;
    std::vector<std::int64_t> flat_;
    std::unordered_map<std::string, std::size_t> index_;
  };

  std::size_t length() const override { return length_; }
  std::size_t generator_count() const override { return gens_.size(); }
  void unit(std::span<std::uint32_t> out, const PrimeField& f) const override;
  void multiply(std::size_t gen, std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
                const PrimeField& f) const override;
  void unit(std::span<BigInt> out) const override;
  void multiply(std::size_t gen, std::span<const BigInt> in, std::span<BigInt> out) const override;
  long double log2_norm_bound(std::size_t degree) const override;
  long double minor_bound_bits(std::size_t s, std::size_t k) const override;

  const std::vector<std::vector<std::int64_t>>& generators() const noexcept { return gens_; }

 private:
  ColumnSystem() = default;
  const std::vector<std::vector<std::uint32_t>>& residues(const PrimeField& f) const;
  // Exact (up to float rounding) log2 norms of every monomial of degree <= k, or false if too many.
  bool ensure_norms(std::size_t k) const;

  mutable std::size_t norms_degree_ = 0;
  mutable std::vector<std::vector<long double>> norms_;  // per degree, descending

  std::size_t length_ = 0;
  std::vector<std::vector<std::int64_t>> gens_;
  std::int64_t max_abs_ = 1;
  mutable std::uint32_t cached_prime_ = 0;
  mutable std::vector<std::vector<std::uint32_t>> cached_residues_;
};

/// The algebra spanned by square-free edge monomials u_A, with u_e^2 = w_e u_e.
/// Works for any integer weights, including zero.
class MonomialBasisSystem final : public FiltrationSystem {
 public:
  struct Term {
    std::size_t edge;
    std::int64_t coeff;
  };
  MonomialBasisSystem(std::vector<std::int64_t> weights, std::vector<std::vector<Term>> generators);

  std::size_t length() const override { return std::size_t{1} << weights_.size(); }
  std::size_t generator_count() const override { return gens_.size(); }
  void unit(std::span<std::uint32_t> out, const PrimeField& f) const override;
  void multiply(std::size_t gen, std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
                const PrimeField& f) const override;
  void unit(std::span<BigInt> out) const override;
  void multiply(std::size_t gen, std::span<const BigInt> in, std::span<BigInt> out) const override;
  long double log2_norm_bound(std::size_t degree) const override;

 private:
  std::vector<std::int64_t> weights_;
  std::vector<std::vector<Term>> gens_;
  long double log2_growth_ = 0;
};

struct EngineRun {
  std::vector<std::size_t> dims;  ///< dims[k] = dim F_k
  bool stabilized = false;        ///< the run reached F_k = F_(k-1)
};

inline constexpr std::size_t kUnlimitedDegree = static_cast<std::size_t>(-1);

EngineRun run_modular(const FiltrationSystem& sys, std::uint32_t prime, std::size_t max_degree = kUnlimitedDegree);
EngineRun run_exact(const FiltrationSystem& sys, std::size_t max_degree = kUnlimitedDegree);

struct CertifiedRun {
  std::vector<std::size_t> dims;
  std::size_t primes_used = 0;
  long double certified_bits = 0;
};

/// Ranks over Q from ranks modulo many primes. Each dim F_k is either at its trivial upper
/// bound or the product of the primes that saw it exceeds a Hadamard bound on the minors that
/// could raise it. With total_only, only the final dimension is certified.
CertifiedRun run_certified(const FiltrationSystem& sys, bool total_only);

/// Number of monomials of degree at most k in g variables (saturating).
std::uint64_t monomial_count(std::size_t g, std::size_t k);

inline constexpr std::uint32_t kPrimeCeiling = 1u << 28;

}  // namespace qps::detail
