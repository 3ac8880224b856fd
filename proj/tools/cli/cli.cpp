#include "cli.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qps/errors.hpp"
#include "qps/tutte.hpp"

namespace qps::cli {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

std::vector<std::string> strs(const std::vector<std::int64_t>& values) {
  std::vector<std::string> out;
  for (auto v : values) out.push_back(std::to_string(v));
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(qps::to_string(v));
  return out;
}

std::string vertex_list(VertexSet s) {
  std::string out;
  for (Vertex v = 0; v < kMaxVertices; ++v) {
    if ((s >> v) & 1U) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
  }
  return out.empty() ? "-" : out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

Vertex parse_vertex(const std::string& text, std::size_t n) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(text, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("bad vertex '" + text + "'");
  }
  if (pos != text.size() || v < 1 || static_cast<std::size_t>(v) > n) {
    throw InvalidInput("vertex '" + text + "' out of range 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(v - 1);
}

Vertex root_of(const RunConfig& c, std::size_t n, const std::string& inline_root = {}) {
  if (!inline_root.empty()) return parse_vertex(inline_root, n);
  if (c.root) return parse_vertex(std::to_string(*c.root), n);
  return 0;
}

QuotientMode quotient_mode(const RunConfig& c, const Graph& g) {
  const auto& m = c.mode;
  if (m == "external" || m == "all") return QuotientMode::external();
  if (m == "internal" || m == "strong") return QuotientMode::internal();
  if (m == "trees") return QuotientMode::trees(root_of(c, g.vertex_count()));
  if (m.starts_with("root:")) return QuotientMode::trees(root_of(c, g.vertex_count(), m.substr(5)));
  throw InvalidInput("unknown mode '" + m + "'");
}

HilbertVariant variant_of(const std::string& v) {
  if (v == "external") return HilbertVariant::kExternal;
  if (v == "trees") return HilbertVariant::kTrees;
  if (v == "internal") return HilbertVariant::kInternal;
  throw InvalidInput("unknown variant '" + v + "'");
}

HilbertVariant variant_of(QuotientMode mode) {
  switch (mode.kind) {
    case AlgebraKind::kTrees: return HilbertVariant::kTrees;
    case AlgebraKind::kInternal: return HilbertVariant::kInternal;
    default: return HilbertVariant::kExternal;
  }
}

struct Session {
  const RunConfig& config;
  Report report;

  ParsedGraph load() const {
    if (config.input.empty()) throw InvalidInput("missing graph file");
    return read_graph_file(config.input);
  }

  WeightAssignment weights(const ParsedGraph& pg) {
    const auto& g = pg.graph;
    const auto& p = config.weights;
    report.note("weights", p.to_string());
    switch (p.kind) {
      case WeightKind::kDefault:
        return pg.has_explicit_weights ? pg.weights : WeightAssignment::unit(g.edge_count());
      case WeightKind::kFromFile:
        if (!pg.has_explicit_weights && g.edge_count() > 0) throw InvalidInput("graph file has no weights");
        return pg.weights;
      case WeightKind::kUnit: return WeightAssignment::unit(g.edge_count());
      case WeightKind::kHecke: return WeightAssignment::uniform(g.edge_count(), p.value);
      case WeightKind::kSample: {
        report.note("seed", str(p.seed));
        auto w = sample_generic_weights(g, EdgePartition::singletons(g.edge_count()), p.seed);
        report.add("q", strs(w.q));
        return w;
      }
      case WeightKind::kPartition: {
        report.note("seed", str(config.seed));
        auto part = EdgePartition::parse(p.partition, g.edge_count());
        auto w = sample_generic_weights(g, part, config.seed);
        report.add("q", strs(w.q));
        return w;
      }
    }
    throw InvalidInput("unknown weight policy");
  }

  AlgebraContext context(const ParsedGraph& pg, WeightAssignment w) const {
    return AlgebraContext(pg.graph, std::move(w), {config.max_edges, config.experimental_zero_q});
  }

  FiltrationOptions options() const {
    FiltrationOptions o;
    o.field = config.field;
    o.engine = config.engine;
    return o;
  }

  FiltrationResult filtrate(const AlgebraContext& ctx, QuotientMode mode) {
    auto result = filtration_hilbert(ctx, mode, options());
    if (config.prepass) {
      auto o = options();
      o.field = FieldSpec::prime_field(*config.prepass);
      auto pre = filtration_hilbert(ctx, mode, o);
      report.add("prepass", strs(pre.hilbert.coefficients()));
      if (pre.dims != result.dims) {
        throw CrossCheckFailure("prime-field pre-pass " + pre.field.to_string() + " gives " + pre.hilbert.row() +
                                ", " + result.field.to_string() + " gives " + result.hilbert.row());
      }
    }
    return result;
  }

  std::int64_t total(const AlgebraContext& ctx, QuotientMode mode) {
    auto dim = total_dimension(ctx, mode, options());
    if (config.prepass) {
      auto o = options();
      o.field = FieldSpec::prime_field(*config.prepass);
      auto pre = total_dimension(ctx, mode, o);
      report.add("prepass", {str(pre)});
      if (pre != dim) {
        throw CrossCheckFailure("prime-field pre-pass gives dimension " + str(pre) + ", main run gives " + str(dim));
      }
    }
    return dim;
  }

  void tutte() {
    auto pg = load();
    auto t = tutte_polynomial(pg.graph);
    for (const auto& [exp, a] : t.grevlex_terms()) report.add("term", {std::to_string(exp.first), std::to_string(exp.second), str(a)});
    if (config.verify) {
      if (tutte_rank_nullity_oracle(pg.graph) != t) throw CrossCheckFailure("rank-nullity expansion disagrees");
      report.add("verified", {"rank-nullity"});
    }
    report.summary.push_back("T(x,y) = " + t.to_string());
    for (auto [x, y] : {std::pair{2, 1}, {1, 1}, {0, 1}}) {
      report.add("eval", {std::to_string(x), std::to_string(y), str(t.evaluate(x, y))});
      report.summary.push_back("T(" + std::to_string(x) + "," + std::to_string(y) + ") = " + str(t.evaluate(x, y)));
    }
  }

  void hilbert() {
    auto pg = load();
    auto h = hilbert_from_tutte(pg.graph, variant_of(config.variant));
    report.add("hilbert", strs(h.coefficients()));
    report.add("total", {str(h.value_at_one())});
  }

  void hilbert_filtration() {
    auto pg = load();
    auto ctx = context(pg, weights(pg));
    auto mode = quotient_mode(config, pg.graph);
    report.note("field", config.field.to_string());
    auto r = filtrate(ctx, mode);
    report.add("dims", strs(r.dims));
    report.add("hilbert", strs(r.hilbert.coefficients()));
    report.add("total", {str(r.total_dim)});
    report.add("engine", {r.engine});
    report.add("coordinates", {std::to_string(r.coordinates)});
    if (r.primes_used) report.add("primes", {std::to_string(r.primes_used)});
    if (config.verify) {
      if (!ctx.weights().is_uniform()) throw InvalidInput("--verify needs equal weights");
      auto h = hilbert_from_tutte(pg.graph, variant_of(mode));
      if (h != r.hilbert) throw CrossCheckFailure("Tutte specialisation gives " + h.row() + ", filtration gives " + r.hilbert.row());
      report.add("verified", {"tutte"});
    }
  }

  void dim() {
    auto pg = load();
    auto w = weights(pg);
    auto mode = quotient_mode(config, pg.graph);
    const auto& m = config.method;
    if (m != "filtration" && m != "score" && m != "both") throw InvalidInput("unknown method '" + m + "'");
    std::optional<std::int64_t> by_filtration;
    std::optional<std::uint64_t> by_score;
    if (m != "score") {
      auto ctx = context(pg, w);
      by_filtration = total(ctx, mode);
      report.add("filtration", {str(*by_filtration)});
    }
    if (m != "filtration") {
      check_mode(pg.graph, mode);
      by_score = score_census(pg.graph, w, CensusMode::matching(mode), {config.max_edges}).count;
      report.add("score", {str(*by_score)});
    }
    if (by_filtration && by_score && static_cast<std::uint64_t>(*by_filtration) != *by_score) {
      throw CrossCheckFailure("filtration dimension " + str(*by_filtration) + " differs from score count " + str(*by_score));
    }
    report.add("dim", {by_filtration ? str(*by_filtration) : str(*by_score)});
  }

  void census() {
    auto pg = load();
    auto w = weights(pg);
    auto mode = CensusMode::matching(quotient_mode(config, pg.graph));
    check_mode(pg.graph, mode.quotient());
    auto c = score_census(pg.graph, w, mode, {config.max_edges, config.vectors});
    report.add("count", {str(c.count)});
    for (const auto& v : c.vectors) report.add("vector", strs(v));
  }

  void annihilator() {
    auto pg = load();
    auto ctx = context(pg, weights(pg));
    std::vector<Rational> t;
    for (const auto& item : split_list(config.t)) t.push_back(parse_rational(item));
    if (t.size() != pg.graph.vertex_count()) {
      throw InvalidInput("--t needs " + std::to_string(pg.graph.vertex_count()) + " values, got " + std::to_string(t.size()));
    }
    auto a = min_annihilating_polynomial(ctx, t);
    report.add("roots", strs(a.roots));
    report.add("coefficients", strs(a.coefficients));
    report.add("degree", {std::to_string(a.degree())});
    report.summary.push_back("minimal polynomial: " + a.factored());
    report.summary.push_back("expanded: " + a.expanded());
    if (config.verify) {
      auto d = single_element_dimension(ctx, t, options());
      if (static_cast<std::size_t>(d) != a.degree()) {
        throw CrossCheckFailure("subalgebra generated by X.t has dimension " + str(d) + ", minimal polynomial degree " +
                                std::to_string(a.degree()));
      }
      report.add("verified", {"dimension"});
      report.summary.push_back("verified: dim Q[X.t] = " + str(d));
    }
  }

  int verify_hecke() {
    auto pg = load();
    auto q = parse_rational(config.q);
    auto mode = quotient_mode(config, pg.graph);
    auto r = verify_hecke_relations(pg.graph, q, mode, config.max_edges);
    report.add("subsets", {std::to_string(r.subsets_checked)});
    report.add("failures", {std::to_string(r.failures.size())});
    for (const auto& f : r.failures) report.add("failure", {vertex_list(f.subset), std::to_string(f.k_min), std::to_string(f.k_max)});
    return r.ok() ? kExitOk : kExitMismatch;
  }

  int check_forests() {
    auto pg = load();
    auto r = indegree_forest_check(pg.graph, std::min<std::size_t>(config.max_edges, kDefaultOracleEdgeCap));
    report.add("forests", {str(r.forests)});
    report.add("indegree-vectors", {str(r.indegree_vectors)});
    report.add("passed", {r.passed() ? "yes" : "no"});
    return r.passed() ? kExitOk : kExitMismatch;
  }

  void product_oracle() {
    auto pg = load();
    if (config.partition.empty()) throw InvalidInput("missing --partition");
    auto part = EdgePartition::parse(config.partition, pg.graph.edge_count());
    auto product = partition_product_oracle(pg.graph, part);
    report.add("partition", {part.to_string()});
    report.add("product", {str(product)});
    if (config.verify) {
      report.note("seed", str(config.seed));
      auto w = sample_generic_weights(pg.graph, part, config.seed);
      report.add("q", strs(w.q));
      auto d = total(context(pg, w), QuotientMode::external());
      report.add("dimension", {str(d)});
      if (static_cast<std::uint64_t>(d) != product) {
        throw CrossCheckFailure("sampled-generic dimension " + str(d) + " differs from product " + str(product));
      }
    }
  }

  void tables() {
    std::vector<std::size_t> ns;
    if (config.complete) {
      ns.push_back(config.complete);
    } else {
      for (std::size_t n = 2; n <= config.max_n; ++n) ns.push_back(n);
    }
    static const std::map<Regime, std::string> names{
        {Regime::kHecke, "hecke"}, {Regime::kOneOff, "one-off"}, {Regime::kGeneric, "generic"}};
    report.note("regime", names.at(config.regime));
    report.note("seed", str(config.seed));
    report.note("field", config.field.to_string());
    for (auto n : ns) {
      auto row = table_row(n, config.regime, config.seed, options());
      auto g = Graph::complete(n);
      if (config.prepass) {
        auto o = options();
        o.field = FieldSpec::prime_field(*config.prepass);
        auto pre = filtration_hilbert(AlgebraContext(g, row.weights, {config.max_edges}), QuotientMode::external(), o);
        if (pre.dims != row.result.dims) {
          throw CrossCheckFailure("K_" + std::to_string(n) + ": prime-field pre-pass gives " + pre.hilbert.row());
        }
      }
      if (config.regime == Regime::kHecke) {
        auto h = hilbert_from_tutte(g, HilbertVariant::kExternal);
        if (h != row.result.hilbert) {
          throw CrossCheckFailure("K_" + std::to_string(n) + ": Tutte specialisation gives " + h.row());
        }
      }
      report.add("K_" + std::to_string(n), strs(row.result.hilbert.coefficients()));
    }
  }
};

}  // namespace

WeightPolicy WeightPolicy::parse(const std::string& text) {
  WeightPolicy p;
  auto arg = [&](std::string_view prefix) { return text.substr(prefix.size()); };
  if (text == "from-file" || text == "file") {
    p.kind = WeightKind::kFromFile;
  } else if (text == "unit") {
    p.kind = WeightKind::kUnit;
  } else if (text.starts_with("hecke:")) {
    p.kind = WeightKind::kHecke;
    p.value = parse_rational(arg("hecke:"));
  } else if (text.starts_with("sample:")) {
    p.kind = WeightKind::kSample;
    std::size_t pos = 0;
    auto s = arg("sample:");
    try {
      p.seed = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (s.empty() || pos != s.size() || s.front() == '-') throw std::invalid_argument("bad seed in '" + text + "'");
  } else if (text.starts_with("partition:")) {
    p.kind = WeightKind::kPartition;
    p.partition = arg("partition:");
    if (p.partition.empty()) throw std::invalid_argument("empty partition");
  } else {
    throw std::invalid_argument("unknown weight policy '" + text + "'");
  }
  return p;
}

std::string WeightPolicy::to_string() const {
  switch (kind) {
    case WeightKind::kDefault: return "default";
    case WeightKind::kFromFile: return "from-file";
    case WeightKind::kUnit: return "unit";
    case WeightKind::kHecke: return "hecke:" + qps::to_string(value);
    case WeightKind::kSample: return "sample:" + std::to_string(seed);
    case WeightKind::kPartition: return "partition:" + partition;
  }
  return "?";
}

void RunConfig::validate() const {
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    throw InvalidInput("unknown command '" + command + "'");
  }
  if (max_edges == 0) throw InvalidInput("--max-edges must be positive");
  if (command == "tables" && complete == 0 && max_n < 2) throw InvalidInput("--max-n must be at least 2");
  if (prepass && field.kind != FieldKind::kRational) throw InvalidInput("--prepass needs --field rational");
  if (experimental_zero_q && command != "hilbert-filtration" && !(command == "dim" && method == "filtration")) {
    throw InvalidInput("--experimental-zero-q only applies to the filtration route");
  }
}

TableRow table_row(std::size_t n, Regime regime, std::uint64_t seed, const FiltrationOptions& options,
                   EdgeIndex distinguished) {
  auto g = Graph::complete(n);
  const auto m = g.edge_count();
  TableRow row{n, {}, WeightAssignment::unit(m)};
  if (m > 0 && regime != Regime::kHecke) {
    EdgePartition part;
    if (regime == Regime::kGeneric) {
      part = EdgePartition::singletons(m);
    } else if (m == 1) {
      part = EdgePartition::single_class(m);
    } else {
      part = EdgePartition::one_off(m, distinguished < m ? distinguished : m - 1);
    }
    row.weights = sample_generic_weights(g, part, seed);
  }
  row.result = filtration_hilbert(AlgebraContext(g, row.weights), QuotientMode::external(), options);
  return row;
}

RunResult run(const RunConfig& config) {
  Session s{config, {}};
  RunResult result;
  try {
    config.validate();
    int code = kExitOk;
    const auto& c = config.command;
    if (c == "tutte") s.tutte();
    else if (c == "hilbert") s.hilbert();
    else if (c == "hilbert-filtration") s.hilbert_filtration();
    else if (c == "dim") s.dim();
    else if (c == "census") s.census();
    else if (c == "annihilator") s.annihilator();
    else if (c == "verify-hecke") code = s.verify_hecke();
    else if (c == "check-forests") code = s.check_forests();
    else if (c == "product-oracle") s.product_oracle();
    else s.tables();
    result.exit_code = code;
    if (code == kExitMismatch) result.error = "cross-check failed";
  } catch (const ParseError& e) {
    result = {kExitParse, {}, e.what()};
  } catch (const std::invalid_argument& e) {
    result = {kExitParse, {}, e.what()};
  } catch (const CapExceeded& e) {
    result = {kExitCap, {}, e.what()};
  } catch (const CrossCheckFailure& e) {
    result = {kExitMismatch, {}, e.what()};
  } catch (const std::exception& e) {
    result = {kExitUsage, {}, e.what()};
  }
  result.report = std::move(s.report);
  return result;
}

}  // namespace qps::cli
