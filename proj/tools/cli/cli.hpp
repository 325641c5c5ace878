// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "connlap/check.hpp"
#include "connlap/graph.hpp"
#include "output.hpp"

namespace connlap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, unreadable inputs, or unknown generator specs.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> sources;  // graph files or generator specs
  Format format = Format::pretty;
  std::uint64_t seed = 1;
  std::string dump;  // operator name for --dump

  std::vector<int> walk_lengths{3};
  bool full_operators = true;
  std::optional<std::uint64_t> field;  // verify --field
  std::string op = "L";                // spectrum --operator
  long long steps = 8;
  bool reverse = false;
  int start = 0;  // simplex index carrying the initial unit state
  std::uint64_t prime = 2;
  double eps = 0.01;
  double tol = 1e-10;
  int max_iter = 50;

  int report_seeds = 50;
  int report_vertices = 20;
  std::vector<double> report_ps{0.1, 0.3, 0.5, 0.7};
  bool report_random = true;
};

/// A graph source is a file path when such a file exists and a generator
/// spec (ranges like "cycle:4..10..2" allowed) otherwise.
struct ResolvedGraph {
  std::string label;
  std::optional<Graph> graph;
  std::string error;
};
std::vector<ResolvedGraph> resolve_sources(const std::vector<std::string>& sources, std::uint64_t seed);
/// Same, but any unresolvable source is a UsageError.
std::vector<Graph> require_graphs(const std::vector<std::string>& sources, std::uint64_t seed);

/// The verify suite for one graph: hydrogen, green_star, energy,
/// trace_identities, unimodular, reciprocity, supersymmetry, and with a
/// prime the field check.
std::vector<Check> verify_graph(const Graph& g, std::optional<std::uint64_t> field = std::nullopt);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_automaton(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_newton(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_product(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. Never throws; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace connlap::cli
