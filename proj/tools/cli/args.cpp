#include <CLI11.hpp>

#include "cli.hpp"

namespace qps::cli {

std::optional<RunConfig> parse_arguments(int argc, const char* const* argv, int& exit_code, std::string& message) {
  RunConfig c;
  CLI::App app{"Exact dimensions and Hilbert polynomials of weighted graph algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field = "rational", engine = "auto", format = "plain", weights;
  app.add_option("--field", field, "rational or prime:P");
  app.add_option("--engine", engine, "rational rank engine: auto, direct, certified");
  app.add_option("--prepass", c.prepass, "prime for a modular run that must agree with the rational run");
  app.add_option("--seed", c.seed, "seed for sampled weights");
  app.add_option("--max-edges", c.max_edges, "edge cap")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "plain or rows")->check(CLI::IsMember({"plain", "rows"}));
  app.add_option("--weights", weights, "from-file, unit, hecke:Q, sample:SEED or partition:SPEC");
  app.add_flag("--experimental-zero-q", c.experimental_zero_q, "allow zero weights (filtration route only)");

  auto sub = [&](const char* name, const char* help, bool with_input = true) {
    auto* s = app.add_subcommand(name, help);
    if (with_input) s->add_option("file", c.input, "graph file")->required();
    return s;
  };
  auto mode_opts = [&](CLI::App* s) {
    s->add_option("--mode", c.mode, "external, trees or internal");
    s->add_option("--root", c.root, "root vertex for trees (1-based)");
  };

  auto* tutte = sub("tutte", "Tutte polynomial");
  tutte->add_flag("--verify", c.verify, "compare with the rank-nullity expansion");

  auto* hilbert = sub("hilbert", "Hilbert polynomial from the Tutte polynomial");
  hilbert->add_option("--variant", c.variant, "external, trees or internal")
      ->check(CLI::IsMember({"external", "trees", "internal"}));

  auto* hf = sub("hilbert-filtration", "Hilbert polynomial by filtration rank");
  mode_opts(hf);
  hf->add_flag("--verify", c.verify, "compare with the Tutte specialisation (equal weights)");

  auto* dim = sub("dim", "total dimension");
  mode_opts(dim);
  dim->add_option("--method", c.method, "filtration, score or both")
      ->check(CLI::IsMember({"filtration", "score", "both"}));

  auto* census = sub("census", "distinct score vectors");
  census->add_option("--mode", c.mode, "all, root:G or strong");
  census->add_option("--root", c.root, "root vertex (1-based)");
  census->add_flag("--vectors", c.vectors, "list the vectors");

  auto* ann = sub("annihilator", "minimal polynomial of X.t");
  ann->add_option("--t", c.t, "comma separated vertex coefficients")->required();
  ann->add_flag("--verify", c.verify, "compare degree with the generated subalgebra dimension");

  auto* hecke = sub("verify-hecke", "check the subset relations at equal weights");
  hecke->add_option("--q", c.q, "common weight");
  mode_opts(hecke);

  sub("check-forests", "forests versus unit indegree vectors");

  auto* prod = sub("product-oracle", "product of forest counts over a partition");
  prod->add_option("--partition", c.partition, "classes such as 1-3,5;4")->required();
  prod->add_flag("--verify", c.verify, "compare with a sampled generic dimension");

  auto* tables = sub("tables", "Hilbert polynomials of complete graphs", false);
  auto* complete = tables->add_option("--complete", c.complete, "single K_n");
  tables->add_option("--max-n", c.max_n, "K_2 .. K_n")->excludes(complete);
  std::string regime = "hecke";
  tables->add_option("--regime", regime, "hecke, one-off or generic")
      ->check(CLI::IsMember({"hecke", "one-off", "generic"}));

  try {
    app.parse(argc, argv);
    c.command = app.get_subcommands().front()->get_name();
    c.field = FieldSpec::parse(field);
    if (engine == "auto") c.engine = RationalEngine::kAuto;
    else if (engine == "direct") c.engine = RationalEngine::kDirect;
    else if (engine == "certified") c.engine = RationalEngine::kCertified;
    else throw CLI::ValidationError("--engine", "unknown engine '" + engine + "'");
    c.format = format == "rows" ? OutputFormat::kRows : OutputFormat::kPlain;
    if (!weights.empty()) c.weights = WeightPolicy::parse(weights);
    c.regime = regime == "one-off" ? Regime::kOneOff : regime == "generic" ? Regime::kGeneric : Regime::kHecke;
  } catch (const CLI::CallForHelp& e) {
    message = app.help();
    exit_code = kExitOk;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    message = e.what();
    exit_code = kExitUsage;
    return std::nullopt;
  } catch (const std::exception& e) {
    message = e.what();
    exit_code = kExitUsage;
    return std::nullopt;
  }
  return c;
}

}  // namespace qps::cli
