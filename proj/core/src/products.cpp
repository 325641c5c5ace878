// SPDX-License-Identifier: Apache-2.0
#include "connlap/products.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "connlap/eigen_sym.hpp"
#include "connlap/operators.hpp"

namespace connlap {

ProductComplex make_product(const Complex& a, const Complex& b) {
  ProductComplex p{a, b, {}};
  p.cells.reserve(static_cast<std::size_t>(a.size()) * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) p.cells.emplace_back(i, j);
  return p;
}

IntMatrix product_connection(const Complex& a, const Complex& b) {
  return kron(connection_laplacian(a), connection_laplacian(b));
}

IntMatrix product_connection_by_cells(const ProductComplex& p) {
  const int n = static_cast<int>(p.cells.size());
  IntMatrix l(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const auto [x, y] = p.cells[s];
      const auto [x2, y2] = p.cells[t];
      if (p.a[x].intersects(p.a[x2]) && p.b[y].intersects(p.b[y2])) l(s, t) = 1;
    }
  return l;
}

IntMatrix product_hodge(const Complex& a, const Complex& b) {
  const IntMatrix ha = build_operators(a).hodge;
  const IntMatrix hb = build_operators(b).hodge;
  return kron(ha, IntMatrix::identity(b.size())) + kron(IntMatrix::identity(a.size()), hb);
}

namespace {

double multiset_distance(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

}  // namespace

ProductReport product_checks(const Complex& a, const Complex& b, double tol) {
  ProductReport r;
  const OperatorBundle oa = build_operators(a);
  const OperatorBundle ob = build_operators(b);
  const IntMatrix l = kron(oa.connection, ob.connection);
  const IntMatrix g = inverse_integral(l);
  r.chi_a = a.euler_characteristic();
  r.chi_b = b.euler_characteristic();
  r.energy = sum_entries(g);
  r.det = det(l);
  r.l2_reciprocity = reciprocity(charpoly(l * l));

  const IntMatrix h = kron(oa.hodge, IntMatrix::identity(b.size())) + kron(IntMatrix::identity(a.size()), ob.hodge);
  r.hydrogen_residual_max = (l - g - abs(h)).max_abs();

  const auto la = eig_sym(oa.connection.to_double()).eigenvalues;
  const auto lb = eig_sym(ob.connection.to_double()).eigenvalues;
  const auto ha = eig_sym(oa.hodge.to_double()).eigenvalues;
  const auto hb = eig_sym(ob.hodge.to_double()).eigenvalues;
  std::vector<double> prods, sums;
  for (double x : la)
    for (double y : lb) prods.push_back(x * y);
  for (double x : ha)
    for (double y : hb) sums.push_back(x + y);
  r.multiplicativity_error = multiset_distance(eig_sym(l.to_double()).eigenvalues, prods);
  r.additivity_error = multiset_distance(eig_sym(h.to_double()).eigenvalues, sums);

  const Integer chi = Integer(static_cast<long>(r.chi_a)) * static_cast<long>(r.chi_b);
  const int n = l.rows();
  const Reciprocity expected = n % 2 == 0 ? Reciprocity::palindromic : Reciprocity::anti_palindromic;
  r.checks.push_back({"energy", r.energy == chi,
                      "sum g = " + r.energy.get_str() + ", chi(A) chi(B) = " + chi.get_str()});
  r.checks.push_back({"unimodular", ::abs(r.det) == 1, "det L = " + r.det.get_str()});
  r.checks.push_back({"l2_reciprocal", r.l2_reciprocity == expected,
                      std::string("charpoly(L^2) is ") + to_string(r.l2_reciprocity) + ", degree " +
                          std::to_string(n)});
  r.checks.push_back({"spectral_multiplicativity", r.multiplicativity_error <= tol,
                      "max deviation " + std::to_string(r.multiplicativity_error)});
  r.checks.push_back({"spectral_additivity", r.additivity_error <= tol,
                      "max deviation " + std::to_string(r.additivity_error)});
  return r;
}

std::vector<Integer> two_time_walk(const IntMatrix& l_a, const IntMatrix& l_b, const std::vector<Integer>& psi0,
                                   long long n, long long m, bool b_first) {
  const int na = l_a.rows(), nb = l_b.rows();
  if (static_cast<long long>(psi0.size()) != static_cast<long long>(na) * nb)
    throw std::invalid_argument("two_time_walk: state length must be |A| |B|");
  const IntMatrix step_a = n >= 0 ? l_a : inverse_integral(l_a);
  const IntMatrix step_b = m >= 0 ? l_b : inverse_integral(l_b);
  // Apply one factor along its own axis of the |A| x |B| state grid.
  auto apply_a = [&](const std::vector<Integer>& u) {
    std::vector<Integer> out(u.size());
    for (int i = 0; i < na; ++i)
      for (int k = 0; k < na; ++k) {
        if (sgn(step_a(i, k)) == 0) continue;
        for (int j = 0; j < nb; ++j) out[i * nb + j] += step_a(i, k) * u[k * nb + j];
      }
    return out;
  };
  auto apply_b = [&](const std::vector<Integer>& u) {
    std::vector<Integer> out(u.size());
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        for (int k = 0; k < nb; ++k)
          if (sgn(step_b(j, k)) != 0) out[i * nb + j] += step_b(j, k) * u[i * nb + k];
    return out;
  };
  std::vector<Integer> u = psi0;
  auto run_a = [&] {
    for (long long s = 0; s < std::llabs(n); ++s) u = apply_a(u);
  };
  auto run_b = [&] {
    for (long long s = 0; s < std::llabs(m); ++s) u = apply_b(u);
  };
  if (b_first) {
    run_b();
    run_a();
  } else {
    run_a();
    run_b();
  }
  return u;
}

}  // namespace connlap
