// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <ostream>

namespace connlap::cli {

namespace {

void add_graph_sources(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("graphs", cfg.sources, "Graph files or generator specs (e.g. cycle:4..10, gnm:20,50:seed=7)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "pretty";
  std::string newton_graph;

  CLI::App app{"Connection Laplacian workbench"};
  app.name("connlap");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--seed", cfg.seed, "Seed for random generators and perturbations");
  app.add_option("--dump", cfg.dump, "Print the named operator matrix for each graph and exit");

  auto* verify = app.add_subcommand("verify", "Check the exact identities on each graph");
  add_graph_sources(verify, cfg);
  verify->add_option("--field", cfg.field, "Also check the identity modulo this prime");

  auto* bounds = app.add_subcommand("bounds", "Spectral radius bound estimators");
  add_graph_sources(bounds, cfg);
  bounds->add_option("--k", cfg.walk_lengths, "Walk lengths for the k-walk bound")->delimiter(',');
  bool no_full = false;
  bounds->add_flag("--no-full", no_full, "Skip the spectra of L and |H| on all simplices");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of an operator");
  add_graph_sources(spectrum, cfg);
  spectrum->add_option("--operator", cfg.op, "One of L, Linv, D, H, Habs, H0, H0abs");

  auto* walk = app.add_subcommand("walk", "Exact trajectory psi(n) = L^n psi(0)");
  add_graph_sources(walk, cfg);
  walk->add_option("--steps", cfg.steps, "Number of forward steps");
  walk->add_flag("--reverse", cfg.reverse, "Run back to time 0 with L^-1");
  walk->add_option("--start", cfg.start, "Simplex index of the initial unit state");

  auto* automaton = app.add_subcommand("automaton", "The walk over a prime field");
  add_graph_sources(automaton, cfg);
  automaton->add_option("--prime", cfg.prime, "Field characteristic");
  automaton->add_option("--steps", cfg.steps, "Number of forward steps");
  automaton->add_flag("--reverse", cfg.reverse, "Run back to time 0");
  automaton->add_option("--start", cfg.start, "Simplex index of the initial unit state");

  auto* newton = app.add_subcommand("newton", "Solve K = L - L^-1 for L on the intersection pattern");
  add_graph_sources(newton, cfg);
  newton->add_option("--graph", newton_graph, "Graph file or generator spec");
  newton->add_option("--eps", cfg.eps, "Perturbation size of the target");
  newton->add_option("--tol", cfg.tol, "Residual tolerance");
  newton->add_option("--max-iter", cfg.max_iter, "Iteration limit");

  auto* product = app.add_subcommand("product", "Checks on the product of two complexes");
  add_graph_sources(product, cfg);

  auto* report = app.add_subcommand("report", "Reference tables and random-graph statistics");
  report->add_option("--seeds", cfg.report_seeds, "Random graphs per edge probability");
  report->add_option("--vertices", cfg.report_vertices, "Vertices of the random graphs");
  report->add_option("--p", cfg.report_ps, "Edge probabilities")->delimiter(',');
  bool no_random = false;
  report->add_flag("--no-random", no_random, "Only the deterministic tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = parse_format(format);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.full_operators = !no_full;
    cfg.report_random = !no_random;
    if (!newton_graph.empty()) cfg.sources.insert(cfg.sources.begin(), newton_graph);

    if (!cfg.dump.empty()) {
      if (cfg.subcommand == "report") throw UsageError("--dump needs graph arguments");
      return cmd_dump(cfg, out, err);
    }
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out, err);
    if (cfg.subcommand == "bounds") return cmd_bounds(cfg, out, err);
    if (cfg.subcommand == "spectrum") return cmd_spectrum(cfg, out, err);
    if (cfg.subcommand == "walk") return cmd_walk(cfg, out, err);
    if (cfg.subcommand == "automaton") return cmd_automaton(cfg, out, err);
    if (cfg.subcommand == "newton") return cmd_newton(cfg, out, err);
    if (cfg.subcommand == "product") return cmd_product(cfg, out, err);
    return cmd_report(cfg, out, err);
  } catch (const UsageError& e) {
    err << "connlap " << cfg.subcommand << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "connlap " << cfg.subcommand << ": " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"connlap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace connlap::cli
