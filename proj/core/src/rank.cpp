#include "qps/rank.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "qps/errors.hpp"

namespace qps {
namespace {

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// s[from, to) += g * row[from, to), without reduction
void add_scaled(std::uint64_t* __restrict s, const std::uint32_t* __restrict row, std::uint32_t g, std::size_t from,
                std::size_t to) {
  for (std::size_t c = from; c < to; ++c) s[c] += static_cast<std::uint64_t>(g) * row[c];
}

void reduce_all(std::uint64_t* __restrict s, std::size_t n, std::uint64_t p) {
  for (std::size_t c = 0; c < n; ++c) s[c] %= p;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 61u}) {
    if (n % p == 0) return n == p;
  }
  std::uint32_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint32_t a : {2u, 7u, 61u}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint32_t prime_below(std::uint32_t below, std::size_t k) {
  std::uint32_t n = below;
  std::size_t found = 0;
  while (n > 2) {
    --n;
    if (is_prime(n)) {
      if (found == k) return n;
      ++found;
    }
  }
  throw std::out_of_range("not enough primes below " + std::to_string(below));
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const std::uint64_t sq = static_cast<std::uint64_t>(p - 1) * (p - 1);
  budget_ = sq == 0 ? std::numeric_limits<std::uint64_t>::max() : (std::numeric_limits<std::uint64_t>::max() - (p - 1)) / sq;
}

std::uint32_t PrimeField::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow_mod(a, p_ - 2, p_);
}

// ---------------------------------------------------------------------------

ModularRankAccumulator::ModularRankAccumulator(PrimeField field, std::size_t length)
    : field_(field), length_(length), scratch_(length) {}


bool ModularRankAccumulator::insert(std::span<const std::uint32_t> v) {
  if (v.size() != length_) throw InvalidInput("vector length mismatch in rank accumulator");
  std::uint64_t* s = scratch_.data();
  for (std::size_t c = 0; c < length_; ++c) s[c] = v[c];
  return finish_insert(s, 0);
}

bool ModularRankAccumulator::finish_insert(std::uint64_t* s, std::size_t first_row) {
  const std::uint64_t p = field_.modulus();
  const std::uint64_t budget = field_.lazy_budget();
  std::uint64_t pending = 0;
  for (std::size_t j = first_row; j < pivots_.size(); ++j) {
    const std::size_t pj = pivots_[j];
    const std::uint64_t f = s[pj] % p;
    if (f == 0) {
      s[pj] = 0;
      continue;
    }
    const std::uint32_t g = static_cast<std::uint32_t>(p - f);
    add_scaled(s, rows_.data() + j * length_, g, pj, length_);
    if (++pending == budget) {
      reduce_all(s, length_, p);
      pending = 0;
    }
  }

  std::size_t pivot = length_;
  for (std::size_t c = 0; c < length_; ++c) {
    s[c] %= p;
    if (pivot == length_ && s[c] != 0) pivot = c;
  }
  if (pivot == length_) return false;

  const std::uint64_t inv = field_.inverse(static_cast<std::uint32_t>(s[pivot]));
  const std::size_t base = rows_.size();
  rows_.resize(base + length_);
  for (std::size_t c = 0; c < length_; ++c) rows_[base + c] = static_cast<std::uint32_t>(s[c] * inv % p);
  pivots_.push_back(pivot);
  return true;
}

std::vector<bool> ModularRankAccumulator::insert_batch(std::span<const std::span<const std::uint32_t>> vs) {
  const std::size_t batch = vs.size();
  std::vector<bool> added(batch, false);
  if (batch == 0) return added;
  for (const auto& v : vs)
    if (v.size() != length_) throw InvalidInput("vector length mismatch in rank accumulator");

  const std::uint64_t p = field_.modulus();
  const std::uint64_t budget = field_.lazy_budget();
  batch_scratch_.resize(batch * length_);
  std::uint64_t* S = batch_scratch_.data();
  for (std::size_t b = 0; b < batch; ++b)
    for (std::size_t c = 0; c < length_; ++c) S[b * length_ + c] = vs[b][c];

  // eliminate the rows present before the batch from every member
  const std::size_t old_rank = pivots_.size();
  std::uint64_t pending = 0;
  for (std::size_t j = 0; j < old_rank; ++j) {
    const std::size_t pj = pivots_[j];
    const std::uint32_t* row = rows_.data() + j * length_;
    for (std::size_t b = 0; b < batch; ++b) {
      std::uint64_t* s = S + b * length_;
      const std::uint64_t f = s[pj] % p;
      if (f == 0) {
        s[pj] = 0;
        continue;
      }
      add_scaled(s, row, static_cast<std::uint32_t>(p - f), pj, length_);
    }
    if (++pending == budget) {
      reduce_all(S, batch * length_, p);
      pending = 0;
    }
  }
  reduce_all(S, batch * length_, p);

  // then sequentially against rows created inside the batch
  for (std::size_t b = 0; b < batch; ++b) added[b] = finish_insert(S + b * length_, old_rank);
  return added;
}

// ---------------------------------------------------------------------------

RationalRankAccumulator::RationalRankAccumulator(std::size_t length) : length_(length) {}

bool RationalRankAccumulator::insert(std::span<const Rational> v) {
  if (v.size() != length_) throw InvalidInput("vector length mismatch in rank accumulator");
  BigInt den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> w(length_);
  for (std::size_t c = 0; c < length_; ++c) w[c] = v[c].get_num() * (den / v[c].get_den());
  return insert_integer(std::move(w));
}

bool RationalRankAccumulator::insert_integer(std::vector<BigInt> v) {
  if (v.size() != length_) throw InvalidInput("vector length mismatch in rank accumulator");
  BigInt g, a, b;
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const std::size_t pj = pivots_[j];
    if (v[pj] == 0) continue;
    const auto& row = rows_[j];
    g = gcd(row[pj], v[pj]);
    a = row[pj] / g;
    b = v[pj] / g;
    // v <- a*v - b*row; row vanishes before pj
    if (a != 1) {
      for (std::size_t c = 0; c < pj; ++c)
        if (v[c] != 0) v[c] *= a;
    }
    for (std::size_t c = pj; c < length_; ++c) {
      if (a != 1) v[c] *= a;
      if (row[c] != 0) mpz_submul(v[c].get_mpz_t(), b.get_mpz_t(), row[c].get_mpz_t());
    }
  }
  std::size_t pivot = length_;
  BigInt content = 0;
  for (std::size_t c = 0; c < length_; ++c) {
    if (v[c] == 0) continue;
    if (pivot == length_) pivot = c;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[c].get_mpz_t());
  }
  if (pivot == length_) return false;
  if (v[pivot] < 0) content = -content;
  if (content != 1)
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace qps
