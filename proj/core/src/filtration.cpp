#include "qps/filtration.hpp"

#include <bit>
#include <charconv>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "filtration_engine.hpp"
#include "qps/errors.hpp"

namespace qps {

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  return {FieldKind::kPrime, p};
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational") return rational();
  if (text.starts_with("prime:")) {
    auto digits = text.substr(6);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p > UINT32_MAX) {
      throw InvalidInput("bad prime in field spec '" + std::string(text) + "'");
    }
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("field must be 'rational' or 'prime:P', got '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::kRational ? "rational" : "prime:" + std::to_string(prime);
}

namespace {

// Generators kept after dropping one vertex per component (their sum is zero there)
// and vertices without edges (their generator is zero).
std::vector<Vertex> kept_generators(const Graph& g) {
  auto labels = g.component_labels();
  std::vector<Vertex> last(g.component_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) last[labels[v]] = v;
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.incident(v).empty() && last[labels[v]] != v) kept.push_back(v);
  return kept;
}

std::unique_ptr<detail::FiltrationSystem> tilde_system(const AlgebraContext& ctx, QuotientMode mode,
                                                       const std::vector<std::vector<Rational>>* combination) {
  ctx.require_tilde();
  const Graph& g = ctx.graph();
  const auto scaled = scale_weights(ctx.weights());
  const auto kept = kept_generators(g);
  ModeFilter filter(g, mode);

  // optional integer combination rows (each row: coefficients over all vertices)
  std::vector<std::vector<std::int64_t>> rows;
  if (combination) {
    for (const auto& t : *combination) {
      BigInt den = common_denominator(t);
      std::vector<std::int64_t> row;
      for (const auto& x : t) {
        BigInt v = x.get_num() * (den / x.get_den());
        if (!v.fits_slong_p() || abs(v) > BigInt(1) << 20) throw CapExceeded("combination coefficients too large");
        row.push_back(v.get_si());
      }
      rows.push_back(std::move(row));
    }
  }

  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  detail::ColumnSystem::Builder builder(combination ? rows.size() : kept.size());
  std::vector<std::int64_t> x(n, 0), values(combination ? rows.size() : kept.size());
  const EdgeSet total = EdgeSet{1} << m;
  for (EdgeSet mask = 0;;) {
    if (filter.keeps(Orientation{mask})) {
      if (combination) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
          __int128 s = 0;
          for (Vertex i = 0; i < n; ++i) s += static_cast<__int128>(rows[r][i]) * x[i];
          if (s > INT64_MAX / 2 || s < INT64_MIN / 2) throw CapExceeded("combined coordinate overflows 64 bits");
          values[r] = static_cast<std::int64_t>(s);
        }
      } else {
        for (std::size_t k = 0; k < kept.size(); ++k) values[k] = x[kept[k]];
      }
      builder.add(values);
    }
    if (++mask >= total) break;
    const int t = std::countr_zero(mask);
    for (int e = 0; e < t; ++e) {
      x[g.edge(e).lo] -= scaled.w[e];
      x[g.edge(e).hi] += scaled.w[e];
    }
    x[g.edge(t).lo] += scaled.w[t];
    x[g.edge(t).hi] -= scaled.w[t];
  }
  return std::make_unique<detail::ColumnSystem>(std::move(builder).finish());
}

std::unique_ptr<detail::FiltrationSystem> monomial_system(const AlgebraContext& ctx, QuotientMode mode) {
  if (mode.kind != AlgebraKind::kExternal) {
    throw InvalidInput("the edge-monomial representation supports the external algebra only");
  }
  const Graph& g = ctx.graph();
  const auto scaled = scale_weights(ctx.weights());
  std::vector<std::vector<detail::MonomialBasisSystem::Term>> gens;
  for (Vertex v : kept_generators(g)) {
    std::vector<detail::MonomialBasisSystem::Term> terms;
    for (EdgeIndex e : g.incident(v)) terms.push_back({e, g.sign(v, e)});
    gens.push_back(std::move(terms));
  }
  return std::make_unique<detail::MonomialBasisSystem>(scaled.w, std::move(gens));
}

std::unique_ptr<detail::FiltrationSystem> build_system(const AlgebraContext& ctx, QuotientMode mode,
                                                       const FiltrationOptions& options) {
  check_mode(ctx.graph(), mode);
  Representation rep = options.representation;
  if (rep == Representation::kAuto) rep = ctx.tilde_defined() ? Representation::kTilde : Representation::kMonomial;
  if (rep == Representation::kTilde) return tilde_system(ctx, mode, nullptr);
  return monomial_system(ctx, mode);
}

struct Outcome {
  std::vector<std::size_t> dims;
  std::string engine;
  std::size_t primes = 0;
};

Outcome run_engine(const detail::FiltrationSystem& sys, const FiltrationOptions& options, bool total_only) {
  if (options.field.kind == FieldKind::kPrime) {
    auto run = detail::run_modular(sys, options.field.prime);
    return {std::move(run.dims), "prime", 1};
  }
  RationalEngine engine = options.engine;
  if (engine == RationalEngine::kAuto) {
    engine = sys.length() <= options.direct_limit ? RationalEngine::kDirect : RationalEngine::kCertified;
  }
  if (engine == RationalEngine::kDirect) {
    auto run = detail::run_exact(sys);
    return {std::move(run.dims), "direct", 0};
  }
  auto run = detail::run_certified(sys, total_only);
  return {std::move(run.dims), "certified", run.primes_used};
}

}  // namespace

FiltrationResult filtration_hilbert(const AlgebraContext& ctx, QuotientMode mode, const FiltrationOptions& options) {
  auto sys = build_system(ctx, mode, options);
  auto outcome = run_engine(*sys, options, false);
  FiltrationResult r;
  r.dims.assign(outcome.dims.begin(), outcome.dims.end());
  r.hilbert = HilbertPolynomial::from_dimensions(r.dims);
  r.total_dim = r.dims.back();
  r.field = options.field;
  r.engine = outcome.engine;
  r.coordinates = sys->length();
  r.primes_used = outcome.primes;
  return r;
}

std::int64_t total_dimension(const AlgebraContext& ctx, QuotientMode mode, const FiltrationOptions& options) {
  auto sys = build_system(ctx, mode, options);
  return static_cast<std::int64_t>(run_engine(*sys, options, true).dims.back());
}

std::int64_t single_element_dimension(const AlgebraContext& ctx, const std::vector<Rational>& t,
                                      const FiltrationOptions& options) {
  if (t.size() != ctx.vertex_count()) throw InvalidInput("t must have one entry per vertex");
  std::vector<std::vector<Rational>> rows{t};
  auto sys = tilde_system(ctx, QuotientMode::external(), &rows);
  return static_cast<std::int64_t>(run_engine(*sys, options, true).dims.back());
}

// ---------------------------------------------------------------------------
// Annihilators

namespace {

std::string format_root_factor(std::string_view var, const Rational& r) {
  if (r == 0) return std::string(var);
  std::string s = "(" + std::string(var);
  s += r > 0 ? " - " : " + ";
  s += to_string(abs(r)) + ")";
  return s;
}

}  // namespace

std::string Annihilator::factored(std::string_view var) const {
  std::string out;
  for (const auto& r : roots) out += format_root_factor(var, r);
  return out.empty() ? "1" : out;
}

std::string Annihilator::expanded(std::string_view var) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Rational& c = coefficients[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational mag = abs(c);
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
  }
  return first ? "0" : out.str();
}

Annihilator min_annihilating_polynomial(const AlgebraContext& ctx, const std::vector<Rational>& t) {
  ctx.require_tilde();
  const Graph& g = ctx.graph();
  if (t.size() != g.vertex_count()) throw InvalidInput("t must have one entry per vertex");

  Rational z = 0;
  for (Vertex i = 0; i < g.vertex_count(); ++i) z += t[i] * ctx.score_offset(i);
  std::set<Rational> values;
  for (EdgeSet mask = 0; mask < ctx.dimension(); ++mask) {
    auto d = ctx.score(Orientation{mask});
    Rational s = 0;
    for (Vertex i = 0; i < g.vertex_count(); ++i) s += t[i] * d[i];
    values.insert(s - z);
  }

  Annihilator a;
  a.roots.assign(values.begin(), values.end());
  a.coefficients = {Rational(1)};
  for (const auto& r : a.roots) {
    std::vector<Rational> next(a.coefficients.size() + 1, Rational(0));
    for (std::size_t k = 0; k < a.coefficients.size(); ++k) {
      next[k + 1] += a.coefficients[k];
      next[k] -= r * a.coefficients[k];
    }
    a.coefficients = std::move(next);
  }

  // the element X.t in tilde coordinates
  TildeVector x(ctx.edge_count());
  for (Vertex i = 0; i < g.vertex_count(); ++i)
    if (t[i] != 0) x += generator_X(ctx, i) * t[i];

  // Evaluate prod_r (x - r) coordinatewise. Over a field a product vanishes iff a factor does.
  std::map<Rational, EdgeSet> witness;
  for (EdgeSet mask = 0; mask < x.size(); ++mask) {
    bool vanishes = false;
    for (const auto& r : a.roots) {
      if (x[mask] - r == 0) {
        vanishes = true;
        break;
      }
    }
    if (!vanishes) {
      throw CrossCheckFailure("annihilator does not vanish at coordinate " + std::to_string(mask));
    }
    witness.try_emplace(x[mask], mask);
  }
  // dropping root r leaves a product that is nonzero where x = r
  for (const auto& r : a.roots) {
    auto it = witness.find(r);
    if (it == witness.end()) throw CrossCheckFailure("root " + to_string(r) + " is not attained: not minimal");
    const Rational& value = x[it->second];
    for (const auto& other : a.roots) {
      if (other != r && value - other == 0) {
        throw CrossCheckFailure("annihilator without root " + to_string(r) + " still vanishes: not minimal");
      }
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Hecke relations

HeckeReport verify_hecke_relations(const Graph& g, const Rational& q, QuotientMode mode, std::size_t max_edges) {
  if (q == 0) throw InvalidInput("q must be nonzero");
  if (g.vertex_count() > kMaxSubsetVertices) {
    throw CapExceeded("subset iteration is capped at " + std::to_string(kMaxSubsetVertices) + " vertices");
  }
  check_mode(g, mode);
  ContextOptions copts;
  copts.max_edges = max_edges;
  AlgebraContext ctx(g, WeightAssignment::uniform(g.edge_count(), q), copts);
  const std::size_t m = g.edge_count();

  std::vector<TildeVector> gens;
  for (Vertex i = 0; i < g.vertex_count(); ++i) gens.push_back(generator_X(ctx, i));

  HeckeReport report;
  const VertexSet all = g.all_vertices();
  for (VertexSet subset = 1; subset <= all; ++subset) {
    int k_min = 0, k_max = 0;
    auto cut = cut_data(g, subset);
    const int down = static_cast<int>(cut.down), up = static_cast<int>(cut.up);
    switch (mode.kind) {
      case AlgebraKind::kExternal:
        k_min = -down;
        k_max = up;
        break;
      case AlgebraKind::kTrees:
        if ((subset >> mode.root) & 1U) continue;
        k_min = -down;
        k_max = up - 1;
        break;
      case AlgebraKind::kInternal:
        if (subset == all) continue;
        k_min = -down + 1;
        k_max = up - 1;
        break;
    }
    TildeVector y(m);
    for (VertexSet s = subset; s; s &= s - 1) y += gens[std::countr_zero(s)];
    TildeVector product = TildeVector::unit(m);
    for (int k = k_min; k <= k_max; ++k) product *= y - TildeVector::constant(m, q * k);
    product = project_quotient(ctx, product, mode);
    ++report.subsets_checked;
    if (!product.is_zero()) report.failures.push_back({subset, k_min, k_max});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Sampling

WeightAssignment sample_generic_weights(const Graph& g, const EdgePartition& partition, std::uint64_t seed,
                                        const SamplerOptions& options) {
  partition.validate(g.edge_count());
  std::mt19937_64 rng(seed);
  std::uint64_t range = std::max<std::uint64_t>(options.initial_range, 2);

  auto draw = [&] {
    WeightAssignment w = WeightAssignment::unit(g.edge_count());
    for (const auto& cls : partition.classes) {
      Rational value(static_cast<unsigned long>(1 + rng() % range));
      for (auto e : cls) w.q[e] = value;
    }
    return w;
  };

  std::uint64_t last_a = 0, last_b = 0;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    auto a = draw();
    auto b = draw();
    last_a = score_census(g, a, CensusMode::all()).count;
    last_b = score_census(g, b, CensusMode::all()).count;
    if (last_a == last_b) return a;
    range *= options.range_growth;
  }
  throw Error("generic weight sampling did not stabilise: last two samples gave dimensions " + std::to_string(last_a) +
              " and " + std::to_string(last_b));
}

}  // namespace qps
