// SPDX-License-Identifier: Apache-2.0
#include "connlap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "connlap/complex.hpp"
#include "connlap/eigen_sym.hpp"
#include "connlap/int_matrix.hpp"
#include "connlap/operators.hpp"

namespace connlap {

namespace {

Eigen::MatrixXd kirchhoff_double(const Graph& g, double off) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    k(a, a) += 1.0;
    k(b, b) += 1.0;
    k(a, b) = k(b, a) = off;
  }
  return k;
}

Bound make(double value) { return {value, true, false}; }

int max_edge_degree_sum(const Graph& g) {
  const auto deg = g.degrees();
  int best = 0;
  for (const auto& [a, b] : g.edges()) best = std::max(best, deg[a] + deg[b]);
  return best;
}

// Exact walk counts: W(k, ·) = A'^k 1.
Integer max_walks(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("walk length must be positive");
  const Graph conn = connection_graph(Complex(g));
  const auto adj = conn.adjacency_lists();
  std::vector<Integer> w(conn.vertex_count(), 1), next(conn.vertex_count());
  for (int step = 0; step < k; ++step) {
    for (int x = 0; x < conn.vertex_count(); ++x) {
      next[x] = 0;
      for (int y : adj[x]) next[x] += w[y];
    }
    std::swap(w, next);
  }
  return *std::max_element(w.begin(), w.end());
}

// log of a positive big integer without overflow.
double log_integer(const Integer& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

template <class Formula>
Bound component_bound(const Graph& g, Formula formula) {
  if (g.edge_count() == 0) return {};
  if (g.is_connected()) {
    const double value = formula(g.max_degree(), g.diameter(), g.vertex_count());
    return {value, !g.is_regular(), false};
  }
  Bound out{-std::numeric_limits<double>::infinity(), true, true};
  for (const Graph& comp : g.components()) {
    if (comp.edge_count() == 0) continue;
    out.value = std::max(out.value, formula(comp.max_degree(), comp.diameter(), comp.vertex_count()));
    if (comp.is_regular()) out.applicable = false;
  }
  return out;
}

}  // namespace

double rho_kirchhoff(const Graph& g) { return eig_sym(kirchhoff_double(g, -1.0)).max(); }

double rho_kirchhoff_signless(const Graph& g) { return eig_sym(kirchhoff_double(g, 1.0)).max(); }

Bound bound_trivial(const Graph& g) {
  if (g.edge_count() == 0) return {};
  return make(2.0 * g.max_degree());
}

Bound bound_anderson_morley(const Graph& g) {
  if (g.edge_count() == 0) return {};
  return make(max_edge_degree_sum(g));
}

Bound bound_dual_vertex(const Graph& g) {
  if (g.edge_count() == 0) return {};
  const double r = 1.0 + max_edge_degree_sum(g);
  return make(r - 1.0 / r);
}

Bound bound_kwalk(const Graph& g, int k) {
  if (g.edge_count() == 0) return {};
  const double root = std::exp(log_integer(max_walks(g, k)) / k);
  const double r = 1.0 + root;
  return make(r - 1.0 / r);
}

std::string max_walk_count(const Graph& g, int k) { return max_walks(g, k).get_str(); }

Bound bound_bhs(const Graph& g) {
  if (g.edge_count() == 0) return {};
  const double e = connection_graph(Complex(g)).edge_count();
  const double u = 1.0 + (std::sqrt(1.0 + 8.0 * e) - 1.0) / 2.0;
  return make(u - 1.0 / u);
}

Bound bound_lsc(const Graph& g) {
  return component_bound(g, [](int d, int diam, int v) {
    return 2.0 * d - 1.0 / (v * (2.0 * diam + 1.0));
  });
}

Bound bound_shi(const Graph& g) {
  return component_bound(g, [](int d, int diam, int v) {
    return 2.0 * d - 2.0 / ((2.0 * diam + 1.0) * v);
  });
}

BoundsReport bounds_report(const Graph& g, const std::vector<int>& ks, bool full_operators) {
  BoundsReport r;
  r.graph_name = g.name();
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  r.regular = g.is_regular();
  r.connected = g.is_connected();
  r.bipartite = g.is_bipartite();
  r.rho = rho_kirchhoff(g);
  r.rho_abs = rho_kirchhoff_signless(g);

  if (full_operators) {
    const Complex c(g);
    const IntMatrix l = connection_laplacian(c);
    r.rho_L = eig_sym(l.to_double()).max();
    const IntMatrix dabs = exterior_derivative(c, true);
    const IntMatrix dirac_abs = dabs + transpose(dabs);
    r.rho_habs_full = eig_sym((dirac_abs * dirac_abs).to_double()).max();
  }

  r.trivial = bound_trivial(g);
  r.anderson_morley = bound_anderson_morley(g);
  r.dual_vertex = bound_dual_vertex(g);
  for (int k : ks) r.kwalk[k] = bound_kwalk(g, k);
  r.bhs = bound_bhs(g);
  r.lsc = bound_lsc(g);
  r.shi = bound_shi(g);
  return r;
}

std::vector<Check> soundness(const BoundsReport& r, double slack) {
  std::vector<Check> out;
  auto against = [&](const std::string& name, const Bound& b, double target, const char* what) {
    if (!b.applicable || std::isnan(target)) return;
    const bool ok = b.value >= target - slack;
    out.push_back({name, ok,
                   name + " = " + std::to_string(b.value) + (ok ? " >= " : " < ") + what + " = " +
                       std::to_string(target)});
  };
  against("trivial", r.trivial, r.rho, "rho");
  against("anderson_morley", r.anderson_morley, r.rho, "rho");
  against("dual_vertex", r.dual_vertex, r.rho, "rho");
  against("dual_vertex_habs", r.dual_vertex, r.rho_habs_full, "rho(|H|)");
  against("bhs", r.bhs, r.rho, "rho");
  against("lsc", r.lsc, r.rho, "rho");
  against("shi", r.shi, r.rho, "rho");
  for (const auto& [k, b] : r.kwalk) {
    against("walk" + std::to_string(k), b, r.rho, "rho");
    against("walk" + std::to_string(k) + "_habs", b, r.rho_habs_full, "rho(|H|)");
  }
  return out;
}

}  // namespace connlap
