// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "cli/cli.hpp"
#include "corpus.hpp"
#include "properties.hpp"
#include "qps/filtration.hpp"
#include "qps/tutte.hpp"

using namespace qps;
using namespace qps::cli;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

class Workspace {
 public:
  Workspace() {
    dir_ = std::filesystem::temp_directory_path() / ("qps-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  ~Workspace() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const Graph& g, const WeightAssignment& q) {
    auto path = dir_ / name;
    std::ofstream(path) << format_graph(g, q);
    return path.string();
  }

 private:
  std::filesystem::path dir_;
};

RunResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qps");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  int code = 0;
  std::string message;
  auto config = parse_arguments(static_cast<int>(argv.size()), argv.data(), code, message);
  if (!config) return {code == 0 ? kExitUsage : code, {}, message};
  return run(*config);
}

std::string field(const RunResult& r, const std::string& key) {
  for (const auto& row : r.report.rows) {
    if (row.key != key) continue;
    std::string s;
    for (const auto& f : row.fields) s += (s.empty() ? "" : " ") + f;
    return s;
  }
  return "<missing " + key + (r.error.empty() ? "" : ": " + r.error) + ">";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const std::vector<std::string> kHecke{"", "", "1 1", "1 2 3 1", "1 3 6 10 11 6 1", "1 4 10 20 35 51 64 60 35 10 1"};
const std::vector<std::string> kOneOff{"", "", "1 1", "1 2 3 2", "1 3 6 10 13 11 4", "1 4 10 20 35 53 72 83 72 38 8"};
const std::vector<std::string> kGeneric{"",        "",
                                        "1 1",     "1 2 3 2",
                                        "1 3 6 10 15 19 10", "1 4 10 20 35 56 84 120 165 220 217 92"};

Verdict ac1(Workspace& ws) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 5; ++n) {
    auto g = Graph::complete(n);
    auto file = ws.write("K" + std::to_string(n) + ".txt", g, WeightAssignment::unit(g.edge_count()));
    auto tutte = field(cli({"hilbert", file, "--variant", "external"}), "hilbert");
    auto filt = field(cli({"hilbert-filtration", file, "--weights", "hecke:1"}), "hilbert");
    v.expect(tutte == kHecke[n], "K_" + std::to_string(n) + " Tutte route gives " + tutte);
    v.expect(filt == kHecke[n], "K_" + std::to_string(n) + " filtration gives " + filt);
  }
  double t = seconds_since(start);
  v.expect(t < 30, "took " + std::to_string(t) + " s, target 30 s");
  return v;
}

Verdict table_check(const std::vector<std::string>& expected, const std::string& regime, std::size_t from,
                    const std::vector<std::string>& extra, double limit) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t n = from; n <= 5; ++n) {
    std::vector<std::string> args{"tables", "--complete", std::to_string(n), "--regime", regime};
    args.insert(args.begin(), extra.begin(), extra.end());
    auto r = cli(args);
    auto row = field(r, "K_" + std::to_string(n));
    v.expect(row == expected[n], "K_" + std::to_string(n) + " gives " + row);
  }
  double t = seconds_since(start);
  std::ostringstream msg;
  msg << std::fixed << std::setprecision(1) << "took " << t << " s, target " << limit << " s";
  v.expect(t < limit, msg.str());
  return v;
}

Verdict ac2() { return table_check(kOneOff, "one-off", 2, {}, 120); }

Verdict ac3() {
  auto rational = table_check(kGeneric, "generic", 2, {}, 600);
  auto prime = table_check(kGeneric, "generic", 2, {"--field", "prime:2147483629"}, 60);
  Verdict v = rational;
  for (const auto& n : prime.notes) v.notes.push_back("prime field: " + n);
  v.pass = rational.pass && prime.pass;
  std::int64_t total = 0;
  std::istringstream in(kGeneric[5]);
  for (std::int64_t x; in >> x;) total += x;
  v.expect(total == 1024, "K_5 row sums to " + std::to_string(total));
  return v;
}

std::vector<std::string> modes_for(const Graph& g) {
  if (!g.is_connected()) return {"external"};
  return {"external", "trees", "internal"};
}

Verdict ac4(Workspace& ws) {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  std::size_t graphs = 0;
  for (const auto& entry : corpus::graphs()) {
    if (entry.graph.edge_count() > 10) continue;
    ++graphs;
    auto samples = corpus::weight_samples(entry.graph, 101);
    bool mixed = false;
    for (const auto& s : samples) {
      bool neg = false, pos = false;
      for (const auto& x : s.q.q) (x < 0 ? neg : pos) = true;
      mixed = mixed || (neg && pos);
      auto file = ws.write(entry.name + "-" + s.name + ".txt", entry.graph, s.q);
      for (const auto& mode : modes_for(entry.graph)) {
        auto r = cli({"dim", file, "--method", "both", "--mode", mode, "--weights", "from-file"});
        v.expect(r.exit_code == kExitOk, entry.name + " " + s.name + " " + mode + ": " + r.error);
      }
    }
    v.expect(samples.size() >= 3 && (mixed || entry.graph.edge_count() < 2), entry.name + ": weight samples");
  }
  v.expect(graphs >= 20, "only " + std::to_string(graphs) + " graphs");
  double t = seconds_since(start);
  v.expect(t < 120, "took " + std::to_string(t) + " s, target 120 s");
  return v;
}

Verdict ac5(Workspace& ws) {
  Verdict v;
  for (const auto& entry : corpus::graphs()) {
    auto file = ws.write(entry.name + ".txt", entry.graph, WeightAssignment::unit(entry.graph.edge_count()));
    auto r = cli({"check-forests", file});
    v.expect(r.exit_code == kExitOk && field(r, "passed") == "yes",
             entry.name + ": forests " + field(r, "forests") + " vectors " + field(r, "indegree-vectors"));
  }
  return v;
}

Verdict ac6() {
  Verdict v;
  for (const auto& entry : corpus::connected_graphs()) {
    const auto& g = entry.graph;
    auto t = tutte_polynomial(g);
    for (const auto& s : corpus::weight_samples(g, 202)) {
      AlgebraContext ctx(g, s.q);
      for (Vertex root = 0; root < g.vertex_count(); ++root) {
        auto dim = total_dimension(ctx, QuotientMode::trees(root));
        auto census = score_census(g, s.q, CensusMode::root_connected(root)).count;
        v.expect(dim == static_cast<std::int64_t>(census), entry.name + " " + s.name + " trees root " + std::to_string(root + 1));
        if (s.name == "unit") v.expect(dim == t.evaluate(1, 1), entry.name + " trees vs T(1,1)");
      }
      auto dim = total_dimension(ctx, QuotientMode::internal());
      auto census = score_census(g, s.q, CensusMode::strongly_connected()).count;
      v.expect(dim == static_cast<std::int64_t>(census), entry.name + " " + s.name + " internal");
      if (s.name == "unit") v.expect(dim == t.evaluate(0, 1), entry.name + " internal vs T(0,1)");
    }
  }
  return v;
}

Verdict ac7(Workspace& ws) {
  Verdict v;
  struct Case {
    std::string name;
    Graph g;
    std::string partition;
    std::uint64_t expected;  // 0: compare with the oracle only
  };
  std::vector<Case> cases{
      {"double-edge", Graph::from_pairs(2, {{0, 1}, {0, 1}}), "singletons", 4},
      {"K4", Graph::complete(4), "one-off", 48},
      {"K4", Graph::complete(4), "1;2-6", 48},
      {"K4", Graph::complete(4), "all", 38},
      {"K4", Graph::complete(4), "1,2;3,4;5,6", 0},
      {"K4", Graph::complete(4), "singletons", 64},
      {"K3", Graph::complete(3), "singletons", 8},
      {"triple-edge", Graph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}), "1,2;3", 0},
      {"cycle-5", Graph::cycle(5), "1-3;4,5", 0},
      {"theta", Graph::from_pairs(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}), "1,2;3,4;5", 0},
      {"bowtie", Graph::from_pairs(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}), "1-3;4-6", 0},
      {"K5", Graph::complete(5), "one-off", 0},
  };
  std::size_t k = 0;
  for (const auto& c : cases) {
    auto file = ws.write("p" + std::to_string(k) + ".txt", c.g, WeightAssignment::unit(c.g.edge_count()));
    auto r = cli({"product-oracle", file, "--partition", c.partition, "--verify", "--seed", std::to_string(k++)});
    auto label = c.name + " [" + c.partition + "]";
    v.expect(r.exit_code == kExitOk, label + ": " + r.error);
    if (c.expected) v.expect(field(r, "product") == std::to_string(c.expected), label + " product " + field(r, "product"));
    v.expect(field(r, "product") == field(r, "dimension"), label + " dimension " + field(r, "dimension"));
  }
  v.expect(cases.size() >= 10, "too few pairs");
  return v;
}

// Evaluates prod (X.t - r) in coordinates, optionally skipping one root.
TildeVector evaluate(const AlgebraContext& ctx, const TildeVector& x, const std::vector<Rational>& roots, std::size_t skip) {
  auto acc = TildeVector::unit(ctx.edge_count());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k != skip) acc *= x - TildeVector::constant(ctx.edge_count(), roots[k]);
  }
  return acc;
}

Verdict ac8() {
  Verdict v;
  auto de = Graph::from_pairs(2, {{0, 1}, {0, 1}});
  for (long q : {1, 2, -3}) {
    AlgebraContext ctx(de, WeightAssignment::uniform(2, Rational(q)));
    auto a = min_annihilating_polynomial(ctx, {Rational(1), Rational(0)});
    std::vector<Rational> want{0, Rational(q), Rational(2 * q)};
    std::sort(want.begin(), want.end());
    v.expect(a.roots == want, "Hecke double edge q=" + std::to_string(q) + ": " + a.factored());
  }
  const std::vector<std::pair<long, long>> splits{{1, 2}, {2, 5}, {-1, 3}};
  for (auto [qa, qb] : splits) {
    AlgebraContext ctx(de, WeightAssignment::from_integers({qa, qb}));
    auto a = min_annihilating_polynomial(ctx, {Rational(1), Rational(0)});
    std::vector<Rational> want{0, Rational(qa), Rational(qb), Rational(qa + qb)};
    std::sort(want.begin(), want.end());
    v.expect(a.roots == want, "split double edge: " + a.factored());
  }

  std::mt19937_64 rng(88);
  const auto& graphs = corpus::graphs();
  for (int k = 0; k < 50; ++k) {
    const auto& g = graphs[rng() % graphs.size()].graph;
    auto q = corpus::random_weights(rng, g.edge_count());
    AlgebraContext ctx(g, q);
    std::vector<Rational> t;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) t.emplace_back(static_cast<long>(rng() % 9) - 4);
    auto a = min_annihilating_polynomial(ctx, t);
    TildeVector x(g.edge_count());
    for (Vertex i = 0; i < g.vertex_count(); ++i) x += generator_X(ctx, i) * t[i];
    v.expect(evaluate(ctx, x, a.roots, a.roots.size()).is_zero(), "pair " + std::to_string(k) + ": not annihilated");
    for (std::size_t s = 0; s < a.roots.size(); ++s) {
      v.expect(!evaluate(ctx, x, a.roots, s).is_zero(), "pair " + std::to_string(k) + ": root " + a.roots[s].get_str() + " is redundant");
    }
  }
  return v;
}

Verdict ac9(Workspace& ws) {
  Verdict v;
  for (const auto& entry : corpus::graphs()) {
    auto file = ws.write(entry.name + "-h.txt", entry.graph, WeightAssignment::unit(entry.graph.edge_count()));
    for (const auto* q : {"1", "-2"}) {
      for (const auto& mode : modes_for(entry.graph)) {
        auto r = cli({"verify-hecke", file, "--q", q, "--mode", mode});
        v.expect(r.exit_code == kExitOk && field(r, "failures") == "0",
                 entry.name + " q=" + q + " " + mode + ": failures " + field(r, "failures"));
      }
    }
  }
  return v;
}

Verdict ac10() {
  Verdict v;
  auto exhaustive = properties::exhaustive_instances();
  auto random = properties::random_instances(2024, 25);
  for (const auto& [name, check] : properties::all_checks()) {
    for (const auto* set : {&exhaustive, &random}) {
      auto outcome = check(*set);
      v.expect(outcome.cases > 0, std::string(name) + ": no cases");
      for (const auto& f : outcome.failures) v.expect(false, std::string(name) + ": " + f);
    }
  }
  return v;
}

}  // namespace

int main() {
  Workspace ws;
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "Hecke table K_2..K_5, Tutte route = filtration", [&] { return ac1(ws); }},
      {"AC2", "one-off table K_2..K_5", ac2},
      {"AC3", "generic table K_2..K_5, rational and prime field", ac3},
      {"AC4", "dim --method both on the corpus", [&] { return ac4(ws); }},
      {"AC5", "forests = unit indegree vectors on the corpus", [&] { return ac5(ws); }},
      {"AC6", "trees/internal dimensions = censuses = T(1,1), T(0,1)", ac6},
      {"AC7", "sampled generic dimension = partition product", [&] { return ac7(ws); }},
      {"AC8", "annihilating polynomials exact and minimal", ac8},
      {"AC9", "Hecke subset relations at q = 1, -2", [&] { return ac9(ws); }},
      {"AC10", "property suites, exhaustive and randomized", ac10},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes.push_back(std::string("exception: ") + e.what());
    }
    all = all && v.pass;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(5) << c.id << c.title << " (" << std::fixed
              << std::setprecision(2) << seconds_since(start) << " s)\n";
    for (const auto& n : v.notes) std::cout << "       " << n << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
