// SPDX-License-Identifier: Apache-2.0
#include "connlap/newton.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "connlap/generators.hpp"
#include "connlap/operators.hpp"

namespace connlap {

SupportPattern::SupportPattern(int n, std::vector<char> mask) : n_(n), mask_(std::move(mask)) {
  if (static_cast<long long>(mask_.size()) != static_cast<long long>(n) * n)
    throw std::invalid_argument("SupportPattern: mask size mismatch");
  for (int i = 0; i < n; ++i) {
    if (!(*this)(i, i)) throw std::invalid_argument("SupportPattern: diagonal must be in the mask");
    for (int j = i; j < n; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("SupportPattern: mask not symmetric");
      if ((*this)(i, j)) coords_.emplace_back(i, j);
    }
  }
}

SupportPattern SupportPattern::of(const Complex& c) {
  const int n = c.size();
  std::vector<char> mask(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mask[static_cast<std::size_t>(i) * n + j] = c[i].intersects(c[j]) ? 1 : 0;
  return SupportPattern(n, std::move(mask));
}

Eigen::MatrixXd perturb_target(const IntMatrix& habs, const SupportPattern& pattern, double eps, std::uint64_t seed) {
  if (eps < 0) throw std::invalid_argument("perturb_target: eps must be >= 0");
  if (habs.rows() != pattern.size()) throw std::invalid_argument("perturb_target: dimension mismatch");
  Eigen::MatrixXd k = habs.to_double();
  if (eps == 0.0) return k;
  Rng rng(seed);
  for (const auto& [i, j] : pattern.coordinates()) {
    const double e = rng.uniform(-eps, eps);
    k(i, j) += e;
    if (i != j) k(j, i) += e;
  }
  return k;
}

const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged: return "converged";
    case NewtonStatus::singular_jacobian: return "singular_jacobian";
    case NewtonStatus::line_search_failed: return "line_search_failed";
    case NewtonStatus::max_iterations: break;
  }
  return "max_iterations";
}

namespace {

struct Eval {
  Eigen::MatrixXd inv;
  Eigen::VectorXd f;  // Π(K - L + L^{-1}) in coordinates
  double norm = INFINITY;
  bool ok = false;
};

Eval evaluate(const Eigen::MatrixXd& k, const Eigen::MatrixXd& l, const SupportPattern& pattern) {
  Eval e;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(l);
  if (!lu.isInvertible()) return e;
  e.inv = lu.inverse();
  const auto& coords = pattern.coordinates();
  e.f.resize(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t c = 0; c < coords.size(); ++c) {
    const auto [i, j] = coords[c];
    e.f(static_cast<Eigen::Index>(c)) = k(i, j) - l(i, j) + e.inv(i, j);
  }
  e.norm = e.f.size() ? e.f.cwiseAbs().maxCoeff() : 0.0;
  e.ok = std::isfinite(e.norm);
  return e;
}

// Columns: Π(-M - L^{-1} M L^{-1}) for M the symmetric unit direction of
// each coordinate.
Eigen::MatrixXd jacobian(const Eigen::MatrixXd& g, const SupportPattern& pattern) {
  const auto& coords = pattern.coordinates();
  const auto m = static_cast<Eigen::Index>(coords.size());
  Eigen::MatrixXd j(m, m);
  for (Eigen::Index col = 0; col < m; ++col) {
    const auto [a, b] = coords[col];
    for (Eigen::Index row = 0; row < m; ++row) {
      const auto [x, y] = coords[row];
      double v = (a == b) ? g(x, a) * g(a, y) : g(x, a) * g(b, y) + g(x, b) * g(a, y);
      if (x == a && y == b) v += 1.0;
      j(row, col) = -v;
    }
  }
  return j;
}

Eigen::MatrixXd to_matrix(const Eigen::VectorXd& coords_value, const SupportPattern& pattern) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(pattern.size(), pattern.size());
  const auto& coords = pattern.coordinates();
  for (std::size_t c = 0; c < coords.size(); ++c) {
    const auto [i, j] = coords[c];
    m(i, j) = m(j, i) = coords_value(static_cast<Eigen::Index>(c));
  }
  return m;
}

}  // namespace

NewtonResult solve_hydrogen(const Eigen::MatrixXd& k, const SupportPattern& pattern, const Eigen::MatrixXd& l0,
                            const NewtonConfig& cfg) {
  if (!(cfg.tol > 0)) throw std::invalid_argument("solve_hydrogen: tol must be positive");
  const int n = pattern.size();
  if (k.rows() != n || k.cols() != n || l0.rows() != n || l0.cols() != n)
    throw std::invalid_argument("solve_hydrogen: dimension mismatch");

  NewtonResult r;
  r.L = l0;
  Eval cur = evaluate(k, r.L, pattern);
  if (!cur.ok) throw std::invalid_argument("solve_hydrogen: initial guess is singular");
  r.residual = cur.norm;
  r.residual_history.push_back(cur.norm);

  while (true) {
    if (cur.norm <= cfg.tol) {
      r.status = NewtonStatus::converged;
      return r;
    }
    if (r.iterations >= cfg.max_iter) {
      r.status = NewtonStatus::max_iterations;
      return r;
    }
    const Eigen::MatrixXd j = jacobian(cur.inv, pattern);
    const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(j).singularValues();
    r.sigma_max = sv.size() ? sv(0) : 0.0;
    r.sigma_min = sv.size() ? sv(sv.size() - 1) : 0.0;
    if (r.sigma_min <= cfg.singular_rtol * r.sigma_max) {
      r.status = NewtonStatus::singular_jacobian;
      return r;
    }
    const Eigen::VectorXd step = Eigen::PartialPivLU<Eigen::MatrixXd>(j).solve(-cur.f);
    const Eigen::MatrixXd dir = to_matrix(step, pattern);

    double alpha = 1.0;
    Eval trial;
    while (true) {
      trial = evaluate(k, r.L + alpha * dir, pattern);
      if (trial.ok && trial.norm < cur.norm) break;
      alpha /= 2.0;
      if (alpha < cfg.min_step) {
        r.status = NewtonStatus::line_search_failed;
        return r;
      }
    }
    r.L += alpha * dir;
    cur = std::move(trial);
    ++r.iterations;
    r.residual = cur.norm;
    r.residual_history.push_back(cur.norm);
  }
}

SupportReport verify_support(const Eigen::MatrixXd& l, const SupportPattern& pattern, double threshold) {
  SupportReport s;
  s.threshold = threshold;
  const Eigen::MatrixXd inv = Eigen::FullPivLU<Eigen::MatrixXd>(l).inverse();
  for (int i = 0; i < pattern.size(); ++i)
    for (int j = 0; j < pattern.size(); ++j) {
      if (pattern(i, j)) continue;
      s.max_outside = std::max(s.max_outside, std::abs(l(i, j)));
      s.max_inverse_outside = std::max(s.max_inverse_outside, std::abs(inv(i, j)));
    }
  return s;
}

NewtonRun run_newton(const Complex& c, double eps, std::uint64_t seed, const NewtonConfig& cfg) {
  const OperatorBundle ops = build_operators(c);
  const SupportPattern pattern = SupportPattern::of(c);
  const Eigen::MatrixXd k = perturb_target(ops.hodge_signless, pattern, eps, seed);
  const Eigen::MatrixXd l0 = ops.connection.to_double();
  NewtonRun run;
  run.result = solve_hydrogen(k, pattern, l0, cfg);
  run.support = verify_support(run.result.L, pattern);
  run.distance_from_start = (run.result.L - l0).cwiseAbs().maxCoeff();
  return run;
}

}  // namespace connlap
