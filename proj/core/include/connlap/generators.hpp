// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "connlap/graph.hpp"

namespace connlap {

/// Seeded generator used by every random family.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions are implementation-defined, so the
/// bounded and real draws below are done by hand; together this makes
/// random graphs identical across compilers and platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 engine_;
};

namespace gen {

Graph empty(int n);
Graph path(int n);                      // n vertices, n-1 edges
Graph cycle(int n);                     // n >= 3
Graph star(int center_degree);          // center 0, leaves 1..d
Graph wheel(int center_degree);         // hub 0 over a rim cycle of length d >= 3
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph grid(int rows, int cols);
/// Outer m-cycle u_i, spokes u_i v_i, inner edges v_i v_{i+k mod m}.
/// Skips with k ≡ 0 (mod m) contribute no inner edges; k ≡ m/2 yields a
/// perfect matching on the inner vertices.
Graph petersen(int m, int k);
/// Two 4-cycles sharing vertex 0 (v = 7, e = 8).
Graph figure_eight();
/// Erdős–Rényi G(n, m): m distinct edges drawn uniformly by rejection.
Graph gnm(int n, int m, std::uint64_t seed);
/// Erdős–Rényi G(n, p): each pair (i < j) kept independently with prob. p.
Graph gnp(int n, double p, std::uint64_t seed);

}  // namespace gen

/// Builds a graph from an inline spec such as "cycle:8", "petersen:6,2",
/// "gnm:20,50:seed=7" or "bary:star:4". Random families take their seed from
/// the spec string or, failing that, from default_seed; having neither is an error.
Graph generate(std::string_view spec, std::optional<std::uint64_t> default_seed = std::nullopt);

/// Expands one numeric range "a..b" (or "a..b..step") inside a spec into a
/// list of concrete specs: "cycle:8..20..2" -> cycle:8, cycle:10, ...
std::vector<std::string> expand_spec(std::string_view spec);

/// Names of the families accepted by generate().
std::vector<std::string> generator_families();

}  // namespace connlap
