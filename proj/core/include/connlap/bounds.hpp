// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "connlap/check.hpp"
#include "connlap/graph.hpp"

namespace connlap {

/// A bound estimator value. Bounds that need at least one edge are
/// inapplicable on edgeless graphs and carry NaN.
struct Bound {
  double value = std::numeric_limits<double>::quiet_NaN();
  bool applicable = false;
  /// LSC/Shi on a disconnected graph: the max over components was taken.
  bool per_component = false;
};

/// Largest eigenvalue of the Kirchhoff matrix B - A.
double rho_kirchhoff(const Graph& g);
/// Largest eigenvalue of the signless Kirchhoff matrix B + A.
double rho_kirchhoff_signless(const Graph& g);

/// 2 max degree.
Bound bound_trivial(const Graph& g);
/// max over edges of d_a + d_b.
Bound bound_anderson_morley(const Graph& g);
/// r - 1/r with r = 1 + max over edges of (d_a + d_b), the max row sum of L.
Bound bound_dual_vertex(const Graph& g);
/// r_k - 1/r_k with r_k = 1 + (max_x W(k, x))^{1/k}, where W(k, x) counts the
/// walks of length k from simplex x in the connection graph. The counts are
/// exact big integers.
Bound bound_kwalk(const Graph& g, int k);
/// Brualdi–Hoffman–Stanley applied to the connection graph with e' edges:
/// u - 1/u, u = 1 + (sqrt(1 + 8 e') - 1) / 2.
Bound bound_bhs(const Graph& g);
/// 2d - 1/(v (2R + 1)), R the diameter. Inapplicable (but still computed)
/// on regular graphs. On disconnected graphs it is evaluated per component
/// with that component's own d, R, v, and the maximum is returned.
Bound bound_lsc(const Graph& g);
/// 2d - 2/((2R + 1) v), same conventions as bound_lsc.
Bound bound_shi(const Graph& g);

/// Exact max over simplices of the number of length-k walks in G'.
std::string max_walk_count(const Graph& g, int k);

struct BoundsReport {
  std::string graph_name;
  double rho = 0.0;           // ρ(B - A)
  double rho_abs = 0.0;       // ρ(B + A)
  /// ρ(|H|) and ρ(L) on all n = v + e simplices; NaN unless requested.
  double rho_habs_full = std::numeric_limits<double>::quiet_NaN();
  double rho_L = std::numeric_limits<double>::quiet_NaN();
  Bound trivial, anderson_morley, dual_vertex, bhs, lsc, shi;
  std::map<int, Bound> kwalk;
  bool regular = false;
  bool connected = false;
  bool bipartite = false;
  int vertices = 0, edges = 0;
};

inline const std::vector<int> kDefaultWalkLengths{3};

BoundsReport bounds_report(const Graph& g, const std::vector<int>& ks = kDefaultWalkLengths,
                           bool full_operators = true);

/// Every applicable bound is >= ρ(B - A) - slack; the dual-vertex and k-walk
/// bounds are also >= ρ(|H|) - slack when ρ(|H|) was computed.
std::vector<Check> soundness(const BoundsReport& r, double slack = 1e-9);

}  // namespace connlap
