#include <doctest.h>

#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "qps/errors.hpp"
#include "qps/filtration.hpp"
#include "qps/tutte.hpp"

using namespace qps;

namespace {

Graph double_edge() { return Graph::from_pairs(2, {{0, 1}, {0, 1}}); }

std::vector<std::int64_t> coeffs(const FiltrationResult& r) { return r.hilbert.coefficients(); }

oracle::Mode oracle_mode(QuotientMode m) {
  switch (m.kind) {
    case AlgebraKind::kTrees: return oracle::Mode::kRoot;
    case AlgebraKind::kInternal: return oracle::Mode::kStrong;
    default: return oracle::Mode::kAll;
  }
}

std::vector<QuotientMode> modes_for(const Graph& g) {
  std::vector<QuotientMode> out{QuotientMode::external()};
  if (g.is_connected()) {
    out.push_back(QuotientMode::trees(0));
    out.push_back(QuotientMode::trees(g.vertex_count() - 1));
    out.push_back(QuotientMode::internal());
  }
  return out;
}

FiltrationOptions with(RationalEngine engine, Representation rep = Representation::kAuto) {
  FiltrationOptions o;
  o.engine = engine;
  o.representation = rep;
  return o;
}

}  // namespace

TEST_CASE("double edge, Hecke and split weights") {
  AlgebraContext hecke(double_edge(), WeightAssignment::unit(2));
  auto h = filtration_hilbert(hecke);
  CHECK(h.dims == std::vector<std::int64_t>{1, 2, 3, 3});
  CHECK(coeffs(h) == std::vector<std::int64_t>{1, 1, 1});

  AlgebraContext split(double_edge(), WeightAssignment::from_integers({1, 2}));
  CHECK(coeffs(filtration_hilbert(split)) == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK(total_dimension(split) == 4);
}

TEST_CASE("complete graphs") {
  AlgebraContext k3(Graph::complete(3), WeightAssignment::unit(3));
  CHECK(total_dimension(k3) == 7);
  CHECK(coeffs(filtration_hilbert(k3)) == std::vector<std::int64_t>{1, 2, 3, 1});

  auto k4 = Graph::complete(4);
  auto q = sample_generic_weights(k4, EdgePartition::singletons(6), 0);
  CHECK(coeffs(filtration_hilbert(AlgebraContext(k4, q))) == std::vector<std::int64_t>{1, 3, 6, 10, 15, 19, 10});
}

TEST_CASE("trees mode on the double edge") {
  AlgebraContext ctx(double_edge(), WeightAssignment::unit(2));
  CHECK(total_dimension(ctx, QuotientMode::trees(0)) == 2);
  CHECK(score_census(double_edge(), WeightAssignment::unit(2), CensusMode::root_connected(0)).count == 2);
}

TEST_CASE("degenerate graphs") {
  AlgebraContext single(Graph(1), WeightAssignment::unit(0));
  CHECK(coeffs(filtration_hilbert(single)) == std::vector<std::int64_t>{1});
  AlgebraContext edgeless(Graph(4), WeightAssignment::unit(0));
  CHECK(coeffs(filtration_hilbert(edgeless)) == std::vector<std::int64_t>{1});
  CHECK(total_dimension(edgeless) == 1);
}

TEST_CASE("filtration matches the u-basis oracle on small corpus graphs") {
  for (const auto& entry : corpus::graphs()) {
    const auto& g = entry.graph;
    if (g.edge_count() > 6) continue;
    for (const auto& sample : corpus::weight_samples(g, 11)) {
      AlgebraContext ctx(g, sample.q);
      for (auto mode : modes_for(g)) {
        CAPTURE(entry.name);
        CAPTURE(sample.name);
        CAPTURE(static_cast<int>(mode.kind));
        auto expected = oracle::filtration_dims(g, sample.q, oracle_mode(mode), mode.root);
        CHECK(filtration_hilbert(ctx, mode).dims == expected);
      }
    }
  }
}

TEST_CASE("engines and representations agree") {
  std::mt19937_64 rng(5);
  for (const auto& entry : corpus::graphs()) {
    const auto& g = entry.graph;
    if (g.edge_count() > 8) continue;
    auto q = corpus::random_weights(rng, g.edge_count());
    AlgebraContext ctx(g, q);
    for (auto mode : modes_for(g)) {
      CAPTURE(entry.name);
      auto direct = filtration_hilbert(ctx, mode, with(RationalEngine::kDirect));
      auto certified = filtration_hilbert(ctx, mode, with(RationalEngine::kCertified));
      CHECK(direct.dims == certified.dims);
      if (mode.kind == AlgebraKind::kExternal) {
        CHECK(filtration_hilbert(ctx, mode, with(RationalEngine::kDirect, Representation::kMonomial)).dims == direct.dims);
        CHECK(filtration_hilbert(ctx, mode, with(RationalEngine::kCertified, Representation::kMonomial)).dims == direct.dims);
      }
      FiltrationOptions prime;
      prime.field = FieldSpec::prime_field(2147483629);
      CHECK(filtration_hilbert(ctx, mode, prime).dims == direct.dims);
      CHECK(total_dimension(ctx, mode) == direct.total_dim);
    }
  }
}

TEST_CASE("Hecke filtration equals the Tutte specialisation") {
  for (const auto& entry : corpus::graphs()) {
    const auto& g = entry.graph;
    for (Rational q : {Rational(1), Rational(-2), Rational(3, 5)}) {
      AlgebraContext ctx(g, WeightAssignment::uniform(g.edge_count(), q));
      CAPTURE(entry.name);
      CHECK(filtration_hilbert(ctx).hilbert == hilbert_from_tutte(g, HilbertVariant::kExternal));
      if (!g.is_connected()) continue;
      CHECK(filtration_hilbert(ctx, QuotientMode::trees(0)).hilbert == hilbert_from_tutte(g, HilbertVariant::kTrees));
      CHECK(filtration_hilbert(ctx, QuotientMode::internal()).hilbert == hilbert_from_tutte(g, HilbertVariant::kInternal));
    }
  }
}

TEST_CASE("zero weights through the monomial representation") {
  auto g = Graph::complete(3);
  for (auto w : {std::vector<long>{0, 1, 1}, {0, 0, 2}, {0, 0, 0}, {1, 0, -1}}) {
    auto q = WeightAssignment::from_integers(w);
    AlgebraContext ctx(g, q, {kDefaultMaxEdges, true});
    auto r = filtration_hilbert(ctx);
    CHECK(r.dims == oracle::filtration_dims(g, q, oracle::Mode::kAll));
    FiltrationOptions prime;
    prime.field = FieldSpec::prime_field(1000003);
    CHECK(filtration_hilbert(ctx, QuotientMode::external(), prime).dims == r.dims);
  }
  AlgebraContext zero(g, WeightAssignment::from_integers({0, 1, 1}), {kDefaultMaxEdges, true});
  CHECK_THROWS_AS(filtration_hilbert(zero, QuotientMode::internal()), InvalidInput);
}

TEST_CASE("field specifications") {
  CHECK(FieldSpec::parse("rational") == FieldSpec::rational());
  CHECK(FieldSpec::parse("prime:101").prime == 101);
  CHECK(FieldSpec::parse("prime:101").to_string() == "prime:101");
  CHECK_THROWS(FieldSpec::parse("prime:100"));
  CHECK_THROWS(FieldSpec::parse("prime:"));
  CHECK_THROWS(FieldSpec::parse("real"));
}

TEST_CASE("small primes may lose rank but never gain it") {
  auto g = Graph::complete(4);
  auto q = WeightAssignment::from_integers({1, 2, 3, 5, 7, 11});
  AlgebraContext ctx(g, q);
  auto exact = filtration_hilbert(ctx);
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    FiltrationOptions o;
    o.field = FieldSpec::prime_field(p);
    auto r = filtration_hilbert(ctx, QuotientMode::external(), o);
    for (std::size_t k = 0; k < r.dims.size() && k < exact.dims.size(); ++k) CHECK(r.dims[k] <= exact.dims[k]);
  }
}

TEST_CASE("annihilating polynomials of the double edge") {
  AlgebraContext hecke(double_edge(), WeightAssignment::uniform(2, Rational(3)));
  auto a = min_annihilating_polynomial(hecke, {Rational(1), Rational(0)});
  CHECK(a.roots == std::vector<Rational>{0, 3, 6});
  CHECK(a.factored() == "X(X - 3)(X - 6)");

  AlgebraContext split(double_edge(), WeightAssignment::from_integers({2, 5}));
  auto b = min_annihilating_polynomial(split, {Rational(1), Rational(0)});
  CHECK(b.roots == std::vector<Rational>{0, 2, 5, 7});
  CHECK(b.expanded() == "X^4 - 14X^3 + 59X^2 - 70X");

  auto zero = min_annihilating_polynomial(split, {Rational(0), Rational(0)});
  CHECK(zero.roots == std::vector<Rational>{0});
  CHECK(zero.coefficients == std::vector<Rational>{0, 1});
}

TEST_CASE("annihilators annihilate and are minimal") {
  std::mt19937_64 rng(17);
  for (const auto& entry : corpus::graphs()) {
    const auto& g = entry.graph;
    auto q = corpus::random_weights(rng, g.edge_count());
    AlgebraContext ctx(g, q);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) t.emplace_back(static_cast<long>(rng() % 7) - 3);
    auto a = min_annihilating_polynomial(ctx, t);
    // the element is diagonal in orientation coordinates: its minimal polynomial has
    // exactly the distinct coordinate values as roots
    std::set<Rational> values;
    for (EdgeSet mask = 0; mask < (EdgeSet{1} << g.edge_count()); ++mask) {
      auto s = oracle::scores(g, q, mask);
      Rational v = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        Rational offset = 0;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
          if (g.edges()[e].hi == i) offset += q[e];
        }
        v += t[i] * (s[i] - offset);
      }
      values.insert(v);
    }
    CAPTURE(entry.name);
    CHECK(a.roots == std::vector<Rational>(values.begin(), values.end()));
    CHECK(single_element_dimension(ctx, t) == static_cast<std::int64_t>(a.degree()));
  }
}

TEST_CASE("Hecke relations") {
  auto k3 = Graph::complete(3);
  auto de = double_edge();
  for (Rational q : {Rational(1), Rational(-2)}) {
    CHECK(verify_hecke_relations(de, q, QuotientMode::external()).ok());
    CHECK(verify_hecke_relations(k3, q, QuotientMode::external()).ok());
    CHECK(verify_hecke_relations(de, q, QuotientMode::internal()).ok());
    CHECK(verify_hecke_relations(k3, q, QuotientMode::trees(1)).ok());
  }
  auto r = verify_hecke_relations(k3, Rational(1), QuotientMode::external());
  CHECK(r.subsets_checked == 7);

  // on strongly connected orientations of the double edge vertex 1 has score (q, q): X_1 = q
  AlgebraContext ctx(de, WeightAssignment::unit(2));
  auto x = project_quotient(ctx, generator_X(ctx, 0) - TildeVector::unit(2), QuotientMode::internal());
  CHECK(x.is_zero());
  CHECK_THROWS_AS(verify_hecke_relations(de, Rational(0), QuotientMode::external()), InvalidInput);
}

TEST_CASE("generic weight sampling is deterministic") {
  auto k4 = Graph::complete(4);
  auto part = EdgePartition::one_off(6, 5);
  auto a = sample_generic_weights(k4, part, 3);
  CHECK(a == sample_generic_weights(k4, part, 3));
  for (std::size_t e = 0; e < 5; ++e) CHECK(a[e] == a[0]);
  CHECK(a[5] != a[0]);
}
