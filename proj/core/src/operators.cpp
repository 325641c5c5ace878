// SPDX-License-Identifier: Apache-2.0
#include "connlap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

#include "connlap/eigen_sym.hpp"
#include "connlap/exact_linalg.hpp"

namespace connlap {

IntMatrix incidence(const Complex& c, bool signless) {
  const Graph& g = c.graph();
  IntMatrix d(g.edge_count(), g.vertex_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const auto [a, b] = g.edges()[k];
    d(k, a) = signless ? 1 : -1;
    d(k, b) = 1;
  }
  return d;
}

IntMatrix exterior_derivative(const Complex& c, bool signless) {
  const int v = c.vertex_count();
  const IntMatrix d0 = incidence(c, signless);
  IntMatrix d(c.size(), c.size());
  for (int k = 0; k < d0.rows(); ++k)
    for (int a = 0; a < v; ++a) d(v + k, a) = d0(k, a);
  return d;
}

IntMatrix connection_laplacian(const Complex& c) {
  const int n = c.size();
  IntMatrix l(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[i].intersects(c[j])) l(i, j) = 1;
  return l;
}

namespace {

IntMatrix kirchhoff_matrix(const Graph& g, bool signless) {
  IntMatrix k(g.vertex_count(), g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    k(a, a) += 1;
    k(b, b) += 1;
    k(a, b) = k(b, a) = signless ? 1 : -1;
  }
  return k;
}

}  // namespace

OperatorBundle build_operators(const Complex& c) {
  OperatorBundle ops{c, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  ops.d0_signed = incidence(c, false);
  ops.d0_signless = incidence(c, true);
  const IntMatrix d = exterior_derivative(c, false);
  const IntMatrix dabs = exterior_derivative(c, true);
  ops.dirac = d + transpose(d);
  ops.hodge = ops.dirac * ops.dirac;
  const IntMatrix dirac_abs = dabs + transpose(dabs);
  ops.hodge_signless = dirac_abs * dirac_abs;
  ops.kirchhoff = kirchhoff_matrix(c.graph(), false);
  ops.kirchhoff_signless = kirchhoff_matrix(c.graph(), true);
  ops.connection = connection_laplacian(c);
  ops.green = inverse_integral(ops.connection);
  return ops;
}

const IntMatrix& operator_by_name(const OperatorBundle& ops, const std::string& name) {
  if (name == "L") return ops.connection;
  if (name == "Linv") return ops.green;
  if (name == "D") return ops.dirac;
  if (name == "H") return ops.hodge;
  if (name == "Habs") return ops.hodge_signless;
  if (name == "H0") return ops.kirchhoff;
  if (name == "H0abs") return ops.kirchhoff_signless;
  throw std::invalid_argument("unknown operator '" + name + "' (expected L, Linv, D, H, Habs, H0, H0abs)");
}

std::vector<std::string> operator_names() { return {"L", "Linv", "D", "H", "Habs", "H0", "H0abs"}; }

IntMatrix green_star(const Complex& c) {
  const int n = c.size();
  std::vector<std::vector<int>> stars(n);
  for (int i = 0; i < n; ++i) stars[i] = star_of(c, c[i]);
  IntMatrix g(n, n);
  std::vector<int> common;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      common.clear();
      std::set_intersection(stars[i].begin(), stars[i].end(), stars[j].begin(), stars[j].end(),
                            std::back_inserter(common));
      const long long value = c[i].parity() * c[j].parity() * euler_characteristic(c, common);
      g(i, j) = g(j, i) = static_cast<long>(value);
    }
  return g;
}

IntMatrix hydrogen_residual(const OperatorBundle& ops) {
  return ops.connection - ops.green - ops.hodge_signless;
}

IntMatrix hydrogen_residual(const Complex& c) { return hydrogen_residual(build_operators(c)); }

Integer energy(const OperatorBundle& ops) { return sum_entries(ops.green); }

Integer energy(const Complex& c) { return sum_entries(inverse_integral(connection_laplacian(c))); }

TraceReport trace_identities(const OperatorBundle& ops) {
  const Complex& c = ops.complex;
  TraceReport r;
  r.n = c.size();
  r.tr_L = trace(ops.connection);
  r.tr_Habs = trace(ops.hodge_signless);
  r.four_e = 4 * c.edge_count();
  r.sum_sphere_chi = 0;
  for (const auto& s : c.simplices()) r.sum_sphere_chi += sphere_chi(c, s);

  const IntMatrix habs_sq = ops.hodge_signless * ops.hodge_signless;
  r.tr_Habs_sq = trace(habs_sq);
  r.two_tr_L_sq_minus_2n = 2 * trace(ops.connection * ops.connection) - 2 * r.n;
  r.four_conn_edges = 4 * connection_graph(c).edge_count();

  const int v = c.vertex_count();
  r.tr_H0abs_sq = 0;
  r.tr_H1abs_sq = 0;
  for (int i = 0; i < c.size(); ++i) (i < v ? r.tr_H0abs_sq : r.tr_H1abs_sq) += habs_sq(i, i);

  auto show = [](const Integer& x) { return x.get_str(); };
  r.checks.push_back({"trace_L", r.tr_L == r.n, "tr L = " + show(r.tr_L) + ", n = " + show(r.n)});
  r.checks.push_back({"trace_Habs", r.tr_Habs == r.four_e && r.tr_Habs == r.sum_sphere_chi,
                      "tr |H| = " + show(r.tr_Habs) + ", sum chi(S(x)) = " + show(r.sum_sphere_chi) +
                          ", 4e = " + show(r.four_e)});
  r.checks.push_back({"trace_Habs_sq",
                      r.tr_Habs_sq == r.two_tr_L_sq_minus_2n && r.tr_Habs_sq == r.four_conn_edges,
                      "tr |H|^2 = " + show(r.tr_Habs_sq) + ", 2 tr L^2 - 2n = " +
                          show(r.two_tr_L_sq_minus_2n) + ", 4|E'| = " + show(r.four_conn_edges)});
  r.checks.push_back({"trace_block_balance", r.tr_H0abs_sq == r.tr_H1abs_sq,
                      "tr |H0|^2 = " + show(r.tr_H0abs_sq) + ", tr |H1|^2 = " + show(r.tr_H1abs_sq)});
  return r;
}

int betti0(const Graph& g) { return g.component_count(); }

int betti1(const Graph& g) { return g.edge_count() - g.vertex_count() + g.component_count(); }

SupersymmetryReport dirac_supersymmetry(const OperatorBundle& ops, double tol) {
  const Complex& c = ops.complex;
  SupersymmetryReport r;
  const IntMatrix dt = transpose(ops.d0_signed);
  const IntMatrix h0 = dt * ops.d0_signed;
  const IntMatrix h1 = ops.d0_signed * dt;
  r.nullity_h0 = h0.rows() - rank(h0);
  r.nullity_h1 = h1.rows() - rank(h1);
  r.b0 = betti0(c.graph());
  r.b1 = betti1(c.graph());
  r.chi = c.euler_characteristic();

  auto nonzero = [tol](const IntMatrix& m) {
    std::vector<double> out;
    if (m.rows() == 0) return out;
    for (double x : eig_sym(m.to_double()).eigenvalues)
      if (std::abs(x) > tol) out.push_back(x);
    return out;
  };
  r.nonzero_h0 = nonzero(h0);
  r.nonzero_h1 = nonzero(h1);
  bool same_count = r.nonzero_h0.size() == r.nonzero_h1.size();
  if (same_count)
    for (std::size_t i = 0; i < r.nonzero_h0.size(); ++i)
      r.max_spectral_mismatch = std::max(r.max_spectral_mismatch, std::abs(r.nonzero_h0[i] - r.nonzero_h1[i]));

  r.checks.push_back({"nonzero_spectra_agree", same_count && r.max_spectral_mismatch <= tol,
                      std::to_string(r.nonzero_h0.size()) + " vs " + std::to_string(r.nonzero_h1.size()) +
                          " nonzero eigenvalues, max mismatch " + std::to_string(r.max_spectral_mismatch)});
  r.checks.push_back({"nullity_h0_is_b0", r.nullity_h0 == r.b0,
                      "nullity " + std::to_string(r.nullity_h0) + ", b0 " + std::to_string(r.b0)});
  r.checks.push_back({"nullity_h1_is_b1", r.nullity_h1 == r.b1,
                      "nullity " + std::to_string(r.nullity_h1) + ", b1 " + std::to_string(r.b1)});
  r.checks.push_back({"euler_poincare", r.b0 - r.b1 == r.chi,
                      "b0 - b1 = " + std::to_string(r.b0 - r.b1) + ", chi = " + std::to_string(r.chi)});
  return r;
}

}  // namespace connlap
