#include "filtration_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <numeric>

#include "qps/errors.hpp"

namespace qps::detail {

// ---------------------------------------------------------------------------
// ColumnSystem

void ColumnSystem::Builder::add(std::span<const std::int64_t> values) {
  std::string key(reinterpret_cast<const char*>(values.data()), values.size_bytes());
  auto [it, inserted] = index_.try_emplace(std::move(key), index_.size());
  if (inserted) flat_.insert(flat_.end(), values.begin(), values.end());
}

ColumnSystem ColumnSystem::Builder::finish() && {
  ColumnSystem sys;
  sys.length_ = index_.size();
  index_.clear();
  for (std::size_t i = 0; i < g_; ++i) {
    std::vector<std::int64_t> col(sys.length_);
    for (std::size_t c = 0; c < sys.length_; ++c) col[c] = flat_[c * g_ + i];
    if (col.empty()) continue;
    auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const std::int64_t centre = std::midpoint(*lo, *hi);
    std::int64_t content = 0;
    for (auto& x : col) {
      x -= centre;
      content = std::gcd(content, x);
    }
    if (content == 0) continue;  // constant on every coordinate
    for (auto& x : col) {
      x /= content;
      sys.max_abs_ = std::max(sys.max_abs_, x < 0 ? -x : x);
    }
    sys.gens_.push_back(std::move(col));
  }
  return sys;
}

const std::vector<std::vector<std::uint32_t>>& ColumnSystem::residues(const PrimeField& f) const {
  if (cached_prime_ != f.modulus()) {
    cached_residues_.assign(gens_.size(), std::vector<std::uint32_t>(length_));
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t c = 0; c < length_; ++c) cached_residues_[i][c] = f.reduce(gens_[i][c]);
    cached_prime_ = f.modulus();
  }
  return cached_residues_;
}

void ColumnSystem::unit(std::span<std::uint32_t> out, const PrimeField&) const {
  std::fill(out.begin(), out.end(), 1u);
}

void ColumnSystem::multiply(std::size_t gen, std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
                            const PrimeField& f) const {
  const auto& r = residues(f)[gen];
  const std::uint64_t p = f.modulus();
  for (std::size_t c = 0; c < length_; ++c) out[c] = static_cast<std::uint32_t>(std::uint64_t{in[c]} * r[c] % p);
}

void ColumnSystem::unit(std::span<BigInt> out) const { std::fill(out.begin(), out.end(), BigInt(1)); }

void ColumnSystem::multiply(std::size_t gen, std::span<const BigInt> in, std::span<BigInt> out) const {
  const auto& g = gens_[gen];
  for (std::size_t c = 0; c < length_; ++c) mpz_mul_si(out[c].get_mpz_t(), in[c].get_mpz_t(), g[c]);
}

long double ColumnSystem::log2_norm_bound(std::size_t degree) const {
  return 0.5L * std::log2(static_cast<long double>(length_)) +
         static_cast<long double>(degree) * std::log2(static_cast<long double>(max_abs_));
}

namespace {
constexpr std::uint64_t kNormWorkLimit = 400'000'000;
}

bool ColumnSystem::ensure_norms(std::size_t k) const {
  if (!norms_.empty() && norms_degree_ >= k) return true;
  const std::size_t g = gens_.size();
  if (monomial_count(g, k) > 2'000'000 || monomial_count(g, k) * std::max<std::size_t>(length_, 1) > kNormWorkLimit) {
    return false;
  }
  norms_.assign(k + 1, {});
  std::vector<long double> ones(length_, 1.0L);
  norms_[0].push_back(0.5L * std::log2(static_cast<long double>(length_)));
  // monomials of degree d as (last variable used, values); extend with variables >= last
  std::vector<std::pair<std::size_t, std::vector<long double>>> layer{{0, ones}};
  for (std::size_t d = 1; d <= k; ++d) {
    std::vector<std::pair<std::size_t, std::vector<long double>>> next;
    for (const auto& [last, vals] : layer) {
      for (std::size_t i = last; i < g; ++i) {
        std::vector<long double> v(length_);
        long double sq = 0;
        for (std::size_t c = 0; c < length_; ++c) {
          v[c] = vals[c] * static_cast<long double>(gens_[i][c]);
          sq += v[c] * v[c];
        }
        norms_[d].push_back(0.5L * std::log2(sq));
        if (d < k) next.emplace_back(i, std::move(v));
      }
    }
    std::sort(norms_[d].begin(), norms_[d].end(), std::greater<>());
    layer = std::move(next);
  }
  norms_degree_ = k;
  return true;
}

long double ColumnSystem::minor_bound_bits(std::size_t s, std::size_t k) const {
  if (!ensure_norms(k)) return FiltrationSystem::minor_bound_bits(s, k);
  std::vector<long double> all;
  for (std::size_t d = 0; d <= k; ++d) all.insert(all.end(), norms_[d].begin(), norms_[d].end());
  const std::size_t take = std::min(s, all.size());
  std::partial_sort(all.begin(), all.begin() + take, all.end(), std::greater<>());
  long double bits = 0;
  for (std::size_t r = 0; r < take; ++r) bits += std::max<long double>(0, all[r]);
  // float rounding in the norms is far below this margin
  return bits * (1 + 1e-9L) + 1;
}

// ---------------------------------------------------------------------------
// MonomialBasisSystem

MonomialBasisSystem::MonomialBasisSystem(std::vector<std::int64_t> weights, std::vector<std::vector<Term>> generators)
    : weights_(std::move(weights)), gens_(std::move(generators)) {
  long double growth = 1;
  for (const auto& gen : gens_) {
    long double s = 0;
    for (const auto& t : gen) {
      long double w = static_cast<long double>(std::llabs(weights_[t.edge]));
      s += static_cast<long double>(std::llabs(t.coeff)) * std::max<long double>(1, w);
    }
    growth = std::max(growth, s);
  }
  log2_growth_ = std::log2(growth);
}

void MonomialBasisSystem::unit(std::span<std::uint32_t> out, const PrimeField&) const {
  std::fill(out.begin(), out.end(), 0u);
  out[0] = 1;
}

void MonomialBasisSystem::multiply(std::size_t gen, std::span<const std::uint32_t> in, std::span<std::uint32_t> out,
                                   const PrimeField& f) const {
  const std::uint64_t p = f.modulus();
  std::fill(out.begin(), out.end(), 0u);
  for (const auto& t : gens_[gen]) {
    const std::uint64_t c = f.reduce(t.coeff);
    const std::uint64_t cw = f.mul(static_cast<std::uint32_t>(c), f.reduce(weights_[t.edge]));
    const std::size_t bit = std::size_t{1} << t.edge;
    for (std::size_t a = 0; a < in.size(); ++a) {
      if (in[a] == 0) continue;
      if (a & bit) out[a] = static_cast<std::uint32_t>((out[a] + cw * in[a]) % p);
      else out[a | bit] = static_cast<std::uint32_t>((out[a | bit] + c * in[a]) % p);
    }
  }
}

void MonomialBasisSystem::unit(std::span<BigInt> out) const {
  std::fill(out.begin(), out.end(), BigInt(0));
  out[0] = 1;
}

void MonomialBasisSystem::multiply(std::size_t gen, std::span<const BigInt> in, std::span<BigInt> out) const {
  std::fill(out.begin(), out.end(), BigInt(0));
  BigInt tmp;
  for (const auto& t : gens_[gen]) {
    const std::size_t bit = std::size_t{1} << t.edge;
    for (std::size_t a = 0; a < in.size(); ++a) {
      if (in[a] == 0) continue;
      if (a & bit) {
        mpz_mul_si(tmp.get_mpz_t(), in[a].get_mpz_t(), t.coeff * weights_[t.edge]);
        out[a] += tmp;
      } else {
        mpz_mul_si(tmp.get_mpz_t(), in[a].get_mpz_t(), t.coeff);
        out[a | bit] += tmp;
      }
    }
  }
}

long double MonomialBasisSystem::log2_norm_bound(std::size_t degree) const {
  return static_cast<long double>(degree) * log2_growth_;
}

// ---------------------------------------------------------------------------
// Incremental filtration

namespace {

using Exponent = std::vector<std::uint16_t>;
constexpr std::size_t kBatch = 16;

struct ModularBackend {
  using Vector = std::vector<std::uint32_t>;
  const FiltrationSystem& sys;
  PrimeField field;
  ModularRankAccumulator acc;

  ModularBackend(const FiltrationSystem& s, std::uint32_t p) : sys(s), field(p), acc(field, s.length()) {}
  Vector unit() const {
    Vector v(sys.length());
    sys.unit(v, field);
    return v;
  }
  Vector multiply(std::size_t gen, const Vector& in) const {
    Vector out(sys.length());
    sys.multiply(gen, in, out, field);
    return out;
  }
  bool insert(const Vector& v) { return acc.insert(v); }
  std::vector<bool> insert_many(const std::vector<Vector>& vs) {
    std::vector<std::span<const std::uint32_t>> views(vs.begin(), vs.end());
    return acc.insert_batch(views);
  }
  std::size_t rank() const { return acc.rank(); }
};

struct ExactBackend {
  using Vector = std::vector<BigInt>;
  const FiltrationSystem& sys;
  RationalRankAccumulator acc;

  explicit ExactBackend(const FiltrationSystem& s) : sys(s), acc(s.length()) {}
  Vector unit() const {
    Vector v(sys.length());
    sys.unit(v);
    return v;
  }
  Vector multiply(std::size_t gen, const Vector& in) const {
    Vector out(sys.length());
    sys.multiply(gen, in, out);
    return out;
  }
  bool insert(const Vector& v) { return acc.insert_integer(v); }
  std::vector<bool> insert_many(const std::vector<Vector>& vs) {
    std::vector<bool> out;
    for (const auto& v : vs) out.push_back(insert(v));
    return out;
  }
  std::size_t rank() const { return acc.rank(); }
};

// Only monomials that added a new direction at degree k-1 are extended at degree k:
// the others already lie in F_(k-1), so their products lie in F_k's earlier part.
template <class Backend>
EngineRun run_incremental(const FiltrationSystem& sys, Backend& be, std::size_t max_degree) {
  using Vector = typename Backend::Vector;
  EngineRun run;
  const std::size_t g = sys.generator_count();

  Vector one = be.unit();
  be.insert(one);
  run.dims.push_back(be.rank());
  if (be.rank() == 0) {
    run.dims.push_back(0);
    run.stabilized = true;
    return run;
  }

  std::vector<std::pair<Exponent, Vector>> frontier;
  frontier.emplace_back(Exponent(g, 0), std::move(one));
  for (std::size_t k = 1;; ++k) {
    if (be.rank() == sys.length()) {
      run.dims.push_back(be.rank());
      run.stabilized = true;
      break;
    }
    if (k > max_degree) break;

    std::map<Exponent, const Vector*> sources;
    std::map<Exponent, std::size_t> via;
    for (const auto& [ex, v] : frontier) {
      for (std::size_t i = 0; i < g; ++i) {
        Exponent e = ex;
        ++e[i];
        if (sources.emplace(e, &v).second) via.emplace(std::move(e), i);
      }
    }
    std::vector<std::pair<Exponent, Vector>> next;
    std::vector<Exponent> chunk_exps;
    std::vector<Vector> chunk;
    auto flush = [&] {
      auto added = be.insert_many(chunk);
      for (std::size_t b = 0; b < chunk.size(); ++b)
        if (added[b]) next.emplace_back(std::move(chunk_exps[b]), std::move(chunk[b]));
      chunk.clear();
      chunk_exps.clear();
    };
    for (const auto& [e, src] : sources) {
      chunk.push_back(be.multiply(via.at(e), *src));
      chunk_exps.push_back(e);
      if (chunk.size() == kBatch) flush();
    }
    flush();
    run.dims.push_back(be.rank());
    if (next.empty()) {
      run.stabilized = true;
      break;
    }
    frontier = std::move(next);
  }
  return run;
}

}  // namespace

EngineRun run_modular(const FiltrationSystem& sys, std::uint32_t prime, std::size_t max_degree) {
  ModularBackend be(sys, prime);
  return run_incremental(sys, be, max_degree);
}

EngineRun run_exact(const FiltrationSystem& sys, std::size_t max_degree) {
  ExactBackend be(sys);
  return run_incremental(sys, be, max_degree);
}

// ---------------------------------------------------------------------------
// Certification

std::uint64_t monomial_count(std::size_t g, std::size_t k) {
  // C(k+g, g), saturating
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= g; ++i) {
    r = r * (k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t degree_count(std::size_t g, std::size_t d) {
  if (g == 0) return d == 0 ? 1 : 0;
  return monomial_count(g - 1, d);
}

}  // namespace

long double FiltrationSystem::minor_bound_bits(std::size_t s, std::size_t k) const {
  long double bits = 0;
  std::uint64_t remaining = s;
  for (std::size_t d = k + 1; d-- > 0 && remaining > 0;) {
    std::uint64_t take = std::min<std::uint64_t>(degree_count(generator_count(), d), remaining);
    bits += static_cast<long double>(take) * std::max<long double>(0, log2_norm_bound(d));
    remaining -= take;
  }
  return bits * (1 + 1e-12L) + 1;
}

namespace {

std::vector<std::size_t> padded(const std::vector<std::size_t>& v, std::size_t n) {
  std::vector<std::size_t> out = v;
  out.resize(std::max(n, v.size()), v.empty() ? 0 : v.back());
  return out;
}

}  // namespace

CertifiedRun run_certified(const FiltrationSystem& sys, bool total_only) {
  CertifiedRun result;
  std::uint32_t prime = kPrimeCeiling;
  auto next_prime = [&] {
    do {
      --prime;
    } while (!is_prime(prime));
    ++result.primes_used;
    return prime;
  };

  EngineRun first = run_modular(sys, next_prime());
  std::vector<std::size_t> best = first.dims;
  // bits[k]: log2 of the product of primes whose run covered degree k
  const long double prime_bits = std::floor(std::log2(static_cast<long double>(prime)));
  std::vector<long double> bits(best.size(), prime_bits);
  long double full_bits = prime_bits;  // primes whose run went all the way to stabilisation
  const std::size_t len = sys.length();
  const std::size_t g = sys.generator_count();

  for (;;) {
    std::size_t need_degree = 0;
    bool uncertain = false;
    const std::size_t first_checked = total_only && best.size() >= 2 ? best.size() - 2 : 0;
    for (std::size_t k = first_checked; k < best.size(); ++k) {
      const std::uint64_t trivial = std::min<std::uint64_t>(len, monomial_count(g, k));
      if (best[k] >= trivial) continue;
      if (sys.minor_bound_bits(best[k] + 1, k) < bits[k]) continue;
      uncertain = true;
      need_degree = std::max(need_degree, k);
    }
    if (!uncertain) break;

    const std::uint32_t p = next_prime();
    const long double pb = std::floor(std::log2(static_cast<long double>(p)));
    EngineRun run = run_modular(sys, p, need_degree);
    bool increased = false;
    for (std::size_t k = 0; k <= need_degree && k < best.size(); ++k) {
      std::size_t rho = k < run.dims.size() ? run.dims[k] : run.dims.back();
      if (!run.stabilized && k >= run.dims.size()) break;
      if (rho > best[k]) {
        best[k] = rho;
        increased = true;
      }
      bits[k] += pb;
    }
    if (increased) {
      // An unlucky earlier prime: redo this prime to the end and merge the tails.
      EngineRun full = run_modular(sys, p);
      const std::size_t n = std::max(best.size(), full.dims.size());
      auto a = padded(best, n), b = padded(full.dims, n);
      for (std::size_t k = 0; k < n; ++k) a[k] = std::max(a[k], b[k]);
      bits.resize(n, full_bits);
      for (std::size_t k = need_degree + 1; k < n; ++k) bits[k] += pb;
      full_bits += pb;
      best = std::move(a);
    }
  }
  result.dims = std::move(best);
  result.certified_bits = bits.empty() ? 0 : *std::min_element(bits.begin(), bits.end());
  return result;
}

}  // namespace qps::detail
