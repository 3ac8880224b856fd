#include <benchmark/benchmark.h>

#include <random>

#include "qps/filtration.hpp"
#include "qps/rank.hpp"
#include "qps/score_census.hpp"
#include "qps/tutte.hpp"

using namespace qps;

namespace {

void BM_ModularRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PrimeField field(prime_below(1U << 31, 0));
  std::mt19937_64 rng(7);
  std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = field.reduce(static_cast<std::int64_t>(rng() >> 1));
  }
  for (auto _ : state) {
    ModularRankAccumulator acc(field, n);
    for (const auto& r : rows) acc.insert(r);
    benchmark::DoNotOptimize(acc.rank());
  }
}
BENCHMARK(BM_ModularRank)->Arg(128)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_RationalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& r : rows) {
    for (auto& x : r) x = Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
  }
  for (auto _ : state) {
    RationalRankAccumulator acc(n);
    for (const auto& r : rows) acc.insert(r);
    benchmark::DoNotOptimize(acc.rank());
  }
}
BENCHMARK(BM_RationalRank)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  auto q = sample_generic_weights(g, EdgePartition::singletons(g.edge_count()), 1);
  for (auto _ : state) benchmark::DoNotOptimize(score_census(g, q, CensusMode::all()).count);
}
BENCHMARK(BM_Census)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Tutte(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tutte_polynomial(g));
}
BENCHMARK(BM_Tutte)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FiltrationPrime(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  auto q = sample_generic_weights(g, EdgePartition::singletons(g.edge_count()), 1);
  AlgebraContext ctx(g, q);
  FiltrationOptions options;
  options.field = FieldSpec::prime_field(prime_below(1U << 31, 0));
  for (auto _ : state) benchmark::DoNotOptimize(filtration_hilbert(ctx, QuotientMode::external(), options).total_dim);
}
BENCHMARK(BM_FiltrationPrime)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_FiltrationHecke(benchmark::State& state) {
  auto g = Graph::complete(static_cast<std::size_t>(state.range(0)));
  AlgebraContext ctx(g, WeightAssignment::unit(g.edge_count()));
  for (auto _ : state) benchmark::DoNotOptimize(filtration_hilbert(ctx).total_dim);
}
BENCHMARK(BM_FiltrationHecke)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
