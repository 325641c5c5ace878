// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "connlap/bounds.hpp"
#include "connlap/complex.hpp"
#include "connlap/dynamics.hpp"
#include "connlap/eigen_sym.hpp"
#include "connlap/exact_linalg.hpp"
#include "connlap/field_matrix.hpp"
#include "connlap/generators.hpp"
#include "connlap/graph_io.hpp"
#include "connlap/matrix_io.hpp"
#include "connlap/newton.hpp"
#include "connlap/operators.hpp"
#include "connlap/products.hpp"
#include "parallel.hpp"

namespace connlap::cli {

using json = nlohmann::ordered_json;

std::vector<ResolvedGraph> resolve_sources(const std::vector<std::string>& sources, std::uint64_t seed) {
  std::vector<ResolvedGraph> out;
  for (const auto& src : sources) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(src, ec)) {
      try {
        Graph g = read_graph_file(src).graph;
        g.set_name(std::filesystem::path(src).filename().string());
        out.push_back({src, std::move(g), {}});
      } catch (const std::exception& e) {
        out.push_back({src, std::nullopt, e.what()});
      }
      continue;
    }
    std::vector<std::string> specs;
    try {
      specs = expand_spec(src);
    } catch (const std::exception& e) {
      out.push_back({src, std::nullopt, e.what()});
      continue;
    }
    for (const auto& spec : specs) {
      try {
        out.push_back({spec, generate(spec, seed), {}});
      } catch (const std::exception& e) {
        out.push_back({spec, std::nullopt, e.what()});
      }
    }
  }
  return out;
}

std::vector<Graph> require_graphs(const std::vector<std::string>& sources, std::uint64_t seed) {
  if (sources.empty()) throw UsageError("no graph given");
  std::vector<Graph> out;
  for (auto& r : resolve_sources(sources, seed)) {
    if (!r.graph) throw UsageError(r.label + ": " + r.error);
    if (r.graph->vertex_count() == 0) throw UsageError(r.label + ": graph has no vertices");
    out.push_back(std::move(*r.graph));
  }
  return out;
}

namespace {

Graph require_single(const RunConfig& cfg) {
  auto graphs = require_graphs(cfg.sources, cfg.seed);
  if (graphs.size() != 1) throw UsageError(cfg.subcommand + " takes exactly one graph");
  return graphs.front();
}

std::string label(const Graph& g) { return g.name().empty() ? "graph" : g.name(); }

Reciprocity expected_l2_reciprocity(int n) {
  return n % 2 == 0 ? Reciprocity::palindromic : Reciprocity::anti_palindromic;
}

std::string failed_names(const std::vector<Check>& checks) {
  std::string s;
  for (const auto& c : checks)
    if (!c.pass) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

Check summarize(const std::string& name, const std::vector<Check>& checks) {
  const bool ok = all_pass(checks);
  return {name, ok, ok ? std::to_string(checks.size()) + " sub-checks hold" : "failing: " + failed_names(checks)};
}

std::vector<std::uint64_t> ramp_state(int n, std::uint64_t p) {
  std::vector<std::uint64_t> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i + 1) % p;
  return s;
}

Check field_check(const OperatorBundle& ops, std::uint64_t p) {
  const std::string name = "field_" + std::to_string(p);
  const int n = ops.connection.rows();
  const FieldMatrix l = field_reduce(ops.connection, p);
  if (field_rank(l) != n) return {name, false, "L is singular mod " + std::to_string(p)};
  const AutomatonState s0{p, ramp_state(n, p), 0};
  const auto forward = automaton_run(l, s0, 0, 8);
  const auto backward = automaton_run(l, forward.back(), 0, 8);
  if (!(backward.front() == s0)) return {name, false, "forward-then-backward run does not return"};
  if (!hydrogen_mod_p(ops.connection, ops.hodge_signless, p))
    return {name, false, "L - L^-1 differs from |H| mod " + std::to_string(p)};
  return {name, true, "invertible, reversible over 8 steps, hydrogen identity holds mod " + std::to_string(p)};
}

}  // namespace

std::vector<Check> verify_graph(const Graph& g, std::optional<std::uint64_t> field) {
  const Complex c(g);
  const OperatorBundle ops = build_operators(c);
  std::vector<Check> checks;

  const IntMatrix residual = hydrogen_residual(ops);
  checks.push_back({"hydrogen", residual.is_zero(), "max |L - L^-1 - |H|| = " + residual.max_abs().get_str()});

  const bool star = inverse_exact(ops.connection) == RatMatrix(green_star(c));
  checks.push_back({"green_star", star, star ? "star formula equals L^-1" : "star formula differs from L^-1"});

  const Integer e = energy(ops);
  const long long chi = c.euler_characteristic();
  checks.push_back({"energy", e == static_cast<long>(chi),
                    "sum of L^-1 = " + e.get_str() + ", v - e = " + std::to_string(chi)});

  checks.push_back(summarize("trace_identities", trace_identities(ops).checks));

  const Integer d = det(ops.connection);
  checks.push_back({"unimodular", ::abs(d) == 1, "det L = " + d.get_str()});

  const int n = c.size();
  const Reciprocity r = reciprocity(charpoly(ops.connection * ops.connection));
  checks.push_back({"reciprocity", r == expected_l2_reciprocity(n),
                    std::string("charpoly(L^2) is ") + to_string(r) + " at degree " + std::to_string(n)});

  checks.push_back(summarize("supersymmetry", dirac_supersymmetry(ops).checks));

  if (field) checks.push_back(field_check(ops, *field));
  return checks;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.field && !is_prime(*cfg.field)) throw UsageError("--field needs a prime, got " + std::to_string(*cfg.field));
  const auto graphs = require_graphs(cfg.sources, cfg.seed);
  const auto results = parallel_map(graphs, [&](const Graph& g) { return verify_graph(g, cfg.field); });
  Table t{{"graph", "check", "status", "detail"}, {}};
  int code = kExitOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const auto& c : results[i]) {
      t.add({label(graphs[i]), c.name, c.pass ? "pass" : "FAIL", c.detail});
      if (!c.pass && code == kExitOk) {
        err << "verify: " << label(graphs[i]) << ": check '" << c.name << "' failed\n";
        code = kExitCheckFailed;
      }
    }
  }
  render(t, cfg.format, out);
  return code;
}

namespace {

json bound_cell(const Bound& b) { return number_or_null(b.value); }

}  // namespace

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sources.empty()) throw UsageError("no graph given");
  std::vector<int> ks = cfg.walk_lengths;
  if (std::find(ks.begin(), ks.end(), 3) == ks.end()) ks.push_back(3);
  for (int k : ks)
    if (k < 1) throw UsageError("walk lengths must be >= 1");
  std::sort(ks.begin(), ks.end());

  struct Row {
    std::optional<BoundsReport> report;
    std::string error;
  };
  const auto resolved = resolve_sources(cfg.sources, cfg.seed);
  const auto rows = parallel_map(resolved, [&](const ResolvedGraph& r) -> Row {
    if (!r.graph) return {std::nullopt, r.error};
    try {
      return {bounds_report(*r.graph, ks, cfg.full_operators), {}};
    } catch (const std::exception& e) {
      return {std::nullopt, e.what()};
    }
  });

  Table t;
  t.columns = {"graph", "rho", "rho_abs", "dual_vertex", "walk3", "bhs", "lsc", "shi", "trivial",
               "anderson_morley"};
  for (int k : ks)
    if (k != 3) t.columns.push_back("walk" + std::to_string(k));
  for (const char* c : {"rho_habs", "rho_L", "regular", "sound", "note"}) t.columns.emplace_back(c);

  int code = kExitOk;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.report) {
      std::vector<json> cells(t.columns.size(), nullptr);
      cells.front() = resolved[i].label;
      cells.back() = "error: " + row.error;
      t.add(std::move(cells));
      err << "bounds: " << resolved[i].label << ": " << row.error << '\n';
      code = kExitCheckFailed;
      continue;
    }
    const BoundsReport& r = *row.report;
    const auto sound = soundness(r);
    std::string note;
    if (r.edges > 0 && !r.lsc.applicable) note = "lsc/shi outside their hypotheses (regular)";
    if (r.lsc.per_component) note += std::string(note.empty() ? "" : "; ") + "lsc/shi: max over components";
    if (!all_pass(sound)) {
      note += std::string(note.empty() ? "" : "; ") + "unsound: " + failed_names(sound);
      code = kExitCheckFailed;
    }
    std::vector<json> cells{resolved[i].label,           r.rho,           r.rho_abs,
                            bound_cell(r.dual_vertex),   bound_cell(r.kwalk.at(3)),
                            bound_cell(r.bhs),           bound_cell(r.lsc), bound_cell(r.shi),
                            bound_cell(r.trivial),       bound_cell(r.anderson_morley)};
    for (int k : ks)
      if (k != 3) cells.push_back(bound_cell(r.kwalk.at(k)));
    cells.push_back(number_or_null(r.rho_habs_full));
    cells.push_back(number_or_null(r.rho_L));
    cells.push_back(r.regular);
    cells.push_back(all_pass(sound));
    cells.push_back(note.empty() ? json(nullptr) : json(note));
    t.add(std::move(cells));
  }
  render(t, cfg.format, out);
  return code;
}

namespace {

/// max_i |s_i - t_i| between sorted λ² and sorted 1/λ².
double reciprocal_pairing_error(const std::vector<double>& eig) {
  std::vector<double> sq, inv;
  for (double x : eig) {
    sq.push_back(x * x);
    inv.push_back(1.0 / (x * x));
  }
  std::sort(sq.begin(), sq.end());
  std::sort(inv.begin(), inv.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < sq.size(); ++i) worst = std::max(worst, std::abs(sq[i] - inv[i]) / std::max(1.0, sq[i]));
  return worst;
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto names = operator_names();
  if (std::find(names.begin(), names.end(), cfg.op) == names.end()) throw UsageError("unknown operator '" + cfg.op + "'");
  const auto graphs = require_graphs(cfg.sources, cfg.seed);
  const bool pairing = cfg.op == "L" || cfg.op == "Linv";
  Table t{{"graph", "operator", "dim", "eigenvalues", "reciprocal_pairing_error"}, {}};
  int code = kExitOk;
  for (const auto& g : graphs) {
    const OperatorBundle ops = build_operators(Complex(g));
    const Spectrum s = eig_sym(operator_by_name(ops, cfg.op).to_double());
    json eig = json::array();
    for (double x : s.eigenvalues) eig.push_back(x);
    json pair = nullptr;
    if (pairing) {
      const double e = reciprocal_pairing_error(s.eigenvalues);
      pair = e;
      if (e > 1e-8) code = kExitCheckFailed;
    }
    t.add({label(g), cfg.op, s.matrix_dim, eig, pair});
  }
  render(t, cfg.format, out);
  return code;
}

namespace {

void emit_state(std::ostream& out, Format f, long long n, const json& state) {
  if (f == Format::csv) {
    out << n;
    for (const auto& x : state) out << ',' << (x.is_string() ? x.get<std::string>() : x.dump());
    out << '\n';
    return;
  }
  out << json{{"n", n}, {"state", state}}.dump() << '\n';
}

void check_walk_args(const RunConfig& cfg, int n) {
  if (cfg.steps < 0) throw UsageError("--steps must be >= 0");
  if (cfg.start < 0 || cfg.start >= n)
    throw UsageError("--start must index a simplex in 0.." + std::to_string(n - 1));
}

}  // namespace

int cmd_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = require_single(cfg);
  const OperatorBundle ops = build_operators(Complex(g));
  const int n = ops.connection.rows();
  check_walk_args(cfg, n);
  IntVector psi0(static_cast<std::size_t>(n));
  psi0[static_cast<std::size_t>(cfg.start)] = 1;

  const Trajectory forward = walk(ops.connection, ops.green, psi0, 0, cfg.steps);
  for (const auto& [time, state] : forward.states) emit_state(out, cfg.format, time, to_json(state));
  if (!cfg.reverse) return kExitOk;

  IntVector u = forward.states.at(cfg.steps);
  for (long long time = cfg.steps - 1; time >= 0; --time) {
    u = ops.green * u;
    emit_state(out, cfg.format, time, to_json(u));
  }
  if (u != psi0) {
    err << "walk: backward run does not return to the initial state\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_automaton(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!is_prime(cfg.prime)) throw UsageError("--prime needs a prime, got " + std::to_string(cfg.prime));
  const Graph g = require_single(cfg);
  const OperatorBundle ops = build_operators(Complex(g));
  const int n = ops.connection.rows();
  check_walk_args(cfg, n);
  const FieldMatrix l = field_reduce(ops.connection, cfg.prime);
  AutomatonState s0{cfg.prime, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0), 0};
  s0.values[static_cast<std::size_t>(cfg.start)] = 1 % cfg.prime;

  auto as_json = [](const AutomatonState& s) {
    json a = json::array();
    for (auto x : s.values) a.push_back(x);
    return a;
  };
  const auto forward = automaton_run(l, s0, 0, cfg.steps);
  for (const auto& s : forward) emit_state(out, cfg.format, s.time, as_json(s));
  if (!cfg.reverse) return kExitOk;

  const auto backward = automaton_run(l, forward.back(), 0, cfg.steps);
  for (auto it = backward.rbegin() + 1; it != backward.rend(); ++it) emit_state(out, cfg.format, it->time, as_json(*it));
  if (!(backward.front() == s0)) {
    err << "automaton: backward run does not return to the initial state\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_newton(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.eps >= 0)) throw UsageError("--eps must be >= 0");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (cfg.max_iter < 0) throw UsageError("--max-iter must be >= 0");
  const Graph g = require_single(cfg);
  NewtonConfig nc;
  nc.tol = cfg.tol;
  nc.max_iter = cfg.max_iter;
  const NewtonRun run = run_newton(Complex(g), cfg.eps, cfg.seed, nc);
  const double violation = std::max(run.support.max_outside, run.support.max_inverse_outside);
  Table t{{"graph", "converged", "iterations", "residual", "support_violation_max", "status", "sigma_min",
           "sigma_max", "distance_from_start"},
          {}};
  t.add({label(g), run.result.converged(), run.result.iterations, number_or_null(run.result.residual),
         violation, to_string(run.result.status), run.result.sigma_min, run.result.sigma_max,
         number_or_null(run.distance_from_start)});
  render(t, cfg.format, out);
  if (!run.result.converged()) {
    err << "newton: " << to_string(run.result.status) << '\n';
    return kExitCheckFailed;
  }
  if (!run.support.pass()) {
    err << "newton: solution leaves the intersection pattern (max " << violation << ")\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_product(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto graphs = require_graphs(cfg.sources, cfg.seed);
  if (graphs.size() != 2) throw UsageError("product takes exactly two graphs");
  const ProductReport r = product_checks(Complex(graphs[0]), Complex(graphs[1]));
  Table t{{"a", "b", "energy", "chi_a", "chi_b", "det", "l2_reciprocity", "hydrogen_residual_max",
           "multiplicativity_error", "additivity_error"},
          {}};
  std::vector<json> row{label(graphs[0]), label(graphs[1]), to_json(r.energy), r.chi_a, r.chi_b, to_json(r.det),
                        to_string(r.l2_reciprocity), to_json(r.hydrogen_residual_max), r.multiplicativity_error,
                        r.additivity_error};
  for (const auto& c : r.checks) {
    t.columns.push_back("check_" + c.name);
    row.push_back(c.pass);
  }
  t.add(std::move(row));
  render(t, cfg.format, out);
  if (!all_pass(r.checks)) {
    err << "product: failing: " << failed_names(r.checks) << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto names = operator_names();
  if (std::find(names.begin(), names.end(), cfg.dump) == names.end())
    throw UsageError("unknown operator '" + cfg.dump + "' for --dump");
  const auto graphs = require_graphs(cfg.sources, cfg.seed);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out << '\n';
    write_matrix(out, operator_by_name(build_operators(Complex(graphs[i])), cfg.dump));
  }
  return kExitOk;
}

}  // namespace connlap::cli
