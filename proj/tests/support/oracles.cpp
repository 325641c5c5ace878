// SPDX-License-Identifier: Apache-2.0
#include "oracles.hpp"

#include <Eigen/Eigenvalues>
#include <random>
#include <stdexcept>

namespace connlap::testing {

std::vector<Integer> faddeev_leverrier(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix m = IntMatrix::zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const Integer t = trace(a * m);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(n - k)] = -q;
  }
  return c;
}

RatMatrix rational_inverse(const IntMatrix& a) {
  const int n = a.rows();
  RatMatrix m(a), inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("rational_inverse: singular");
    for (int j = 0; j < n; ++j) {
      std::swap(m(col, j), m(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rational p = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

namespace {

Integer laplace(const IntMatrix& a, std::vector<int>& cols, int row) {
  const int n = a.rows();
  if (row == n) return 1;
  Integer total = 0;
  int sign = 1;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const int c = cols[i];
    if (a(row, c) != 0) {
      cols.erase(cols.begin() + static_cast<long>(i));
      const Integer minor = laplace(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<long>(i), c);
      total += sign * a(row, c) * minor;
    }
    sign = -sign;
  }
  return total;
}

Integer walks_from(const std::vector<std::vector<int>>& adj, int x, int k) {
  if (k == 0) return 1;
  Integer total = 0;
  for (int y : adj[static_cast<std::size_t>(x)]) total += walks_from(adj, y, k - 1);
  return total;
}

}  // namespace

Integer laplace_det(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("laplace_det: non-square");
  std::vector<int> cols(static_cast<std::size_t>(a.cols()));
  for (int i = 0; i < a.cols(); ++i) cols[static_cast<std::size_t>(i)] = i;
  return laplace(a, cols, 0);
}

Integer enumerate_max_walks(const Complex& c, int k) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(c.size()));
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (x != y && c[x].intersects(c[y])) adj[static_cast<std::size_t>(x)].push_back(y);
  Integer best = 0;
  for (int x = 0; x < c.size(); ++x) best = std::max(best, walks_from(adj, x, k));
  return best;
}

std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

IntMatrix signless_hodge_by_blocks(const Complex& c) {
  IntMatrix h(c.size(), c.size());
  const Graph& g = c.graph();
  const auto deg = g.degrees();
  for (int v = 0; v < g.vertex_count(); ++v) h(c.index_of(Simplex::vertex(v)), c.index_of(Simplex::vertex(v))) = deg[v];
  for (const auto& [a, b] : g.edges()) {
    const int ia = c.index_of(Simplex::vertex(a)), ib = c.index_of(Simplex::vertex(b));
    h(ia, ib) = h(ib, ia) = 1;
  }
  for (const auto& e : g.edges())
    for (const auto& f : g.edges()) {
      int shared = 0;
      for (Vertex x : {e.first, e.second})
        if (x == f.first || x == f.second) ++shared;
      h(c.index_of(Simplex::edge(e.first, e.second)), c.index_of(Simplex::edge(f.first, f.second))) = shared;
    }
  return h;
}

IntMatrix random_unimodular(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  IntMatrix lower = IntMatrix::identity(n), upper = IntMatrix::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      lower(i, j) = entry(rng);
      upper(j, i) = entry(rng);
    }
  return lower * upper;
}

}  // namespace connlap::testing
