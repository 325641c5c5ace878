// SPDX-License-Identifier: Apache-2.0
#include "connlap/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace connlap {

double Spectrum::radius() const {
  double r = 0.0;
  for (double x : eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

namespace {

double off_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

namespace {

struct JacobiOutcome {
  Eigen::MatrixXd a, v;
  int sweeps = 0;
  double off = 0.0, norm = 0.0;
};

JacobiOutcome jacobi(const Eigen::MatrixXd& m, double tol, int max_sweeps, bool want_vectors) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_sym: non-square matrix");
  const int n = static_cast<int>(m.rows());
  JacobiOutcome r;
  r.norm = m.norm();
  if ((m - m.transpose()).norm() > 1e-12 * std::max(r.norm, 1.0))
    throw std::invalid_argument("eig_sym: matrix is not symmetric");

  r.a = m;
  if (want_vectors) r.v = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd& a = r.a;
  const double target = tol * (r.norm > 0.0 ? r.norm : 1.0);

  r.off = off_norm(a);
  while (r.off > target) {
    if (r.sweeps == max_sweeps)
      throw ConvergenceError("eig_sym: no convergence after " + std::to_string(max_sweeps) +
                             " sweeps (off-diagonal " + std::to_string(r.off / std::max(r.norm, 1.0)) + ")");
    ++r.sweeps;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        // Once a_pq is negligible next to both diagonal entries, drop it.
        if (r.sweeps > 4 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // a <- J^T a J: by symmetry only columns p and q need the rotation;
        // the rows are mirrored afterwards.
        double* cp = a.col(p).data();
        double* cq = a.col(q).data();
        for (int k = 0; k < n; ++k) {
          const double akp = cp[k], akq = cq[k];
          cp[k] = c * akp - s * akq;
          cq[k] = s * akp + c * akq;
        }
        cp[p] = app - t * apq;
        cq[q] = aqq + t * apq;
        cp[q] = cq[p] = 0.0;
        for (int k = 0; k < n; ++k) {
          a(p, k) = cp[k];
          a(q, k) = cq[k];
        }
        if (want_vectors) {
          double* vp = r.v.col(p).data();
          double* vq = r.v.col(q).data();
          for (int k = 0; k < n; ++k) {
            const double vkp = vp[k], vkq = vq[k];
            vp[k] = c * vkp - s * vkq;
            vq[k] = s * vkp + c * vkq;
          }
        }
      }
    r.off = off_norm(a);
  }
  return r;
}

std::vector<int> diagonal_order(const Eigen::MatrixXd& a) {
  std::vector<int> order(static_cast<std::size_t>(a.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
  return order;
}

Spectrum make_spectrum(const JacobiOutcome& r, const std::vector<int>& order) {
  Spectrum s;
  s.matrix_dim = static_cast<int>(r.a.rows());
  s.sweeps = r.sweeps;
  s.tolerance_achieved = r.off / (r.norm > 0.0 ? r.norm : 1.0);
  for (int i : order) s.eigenvalues.push_back(r.a(i, i));
  return s;
}

}  // namespace

EigenDecomposition eig_sym_vectors(const Eigen::MatrixXd& m, double tol, int max_sweeps) {
  const JacobiOutcome r = jacobi(m, tol, max_sweeps, true);
  const auto order = diagonal_order(r.a);
  EigenDecomposition out;
  out.spectrum = make_spectrum(r, order);
  out.vectors.resize(r.v.rows(), r.v.cols());
  for (std::size_t i = 0; i < order.size(); ++i) out.vectors.col(static_cast<Eigen::Index>(i)) = r.v.col(order[i]);
  return out;
}

Spectrum eig_sym(const Eigen::MatrixXd& m, double tol, int max_sweeps) {
  const JacobiOutcome r = jacobi(m, tol, max_sweeps, false);
  return make_spectrum(r, diagonal_order(r.a));
}

}  // namespace connlap
