// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "connlap/complex.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap {

/// Symmetric mask with mask(x, y) = true iff simplices x and y intersect.
class SupportPattern {
 public:
  SupportPattern(int n, std::vector<char> mask);
  static SupportPattern of(const Complex& c);

  int size() const { return n_; }
  bool operator()(int i, int j) const { return mask_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  /// Upper-triangle positions (diagonal included) inside the mask, row-major.
  const std::vector<std::pair<int, int>>& coordinates() const { return coords_; }

 private:
  int n_;
  std::vector<char> mask_;
  std::vector<std::pair<int, int>> coords_;
};

struct NewtonConfig {
  double tol = 1e-10;
  int max_iter = 50;
  double min_step = 0x1.0p-20;
  /// Jacobians with σ_min <= singular_rtol σ_max are treated as singular.
  double singular_rtol = 1e-10;
};

/// K = |H| + E with E symmetric, supported on the pattern, and each upper
/// entry uniform in [-eps, eps], drawn in coordinate order.
Eigen::MatrixXd perturb_target(const IntMatrix& habs, const SupportPattern& pattern, double eps, std::uint64_t seed);

enum class NewtonStatus { converged, singular_jacobian, line_search_failed, max_iterations };
const char* to_string(NewtonStatus s);

struct NewtonResult {
  Eigen::MatrixXd L;
  NewtonStatus status = NewtonStatus::max_iterations;
  int iterations = 0;
  double residual = 0.0;  // ‖Π(K - L + L^{-1})‖_∞ at L
  std::vector<double> residual_history;
  /// Singular values of the last Jacobian formed (0 if none was needed).
  double sigma_min = 0.0, sigma_max = 0.0;
  bool converged() const { return status == NewtonStatus::converged; }
};

/// Damped Newton on Π(K - L + L^{-1}) = 0 over symmetric L supported on the
/// pattern. Aborts on a singular Jacobian rather than regularizing.
NewtonResult solve_hydrogen(const Eigen::MatrixXd& k, const SupportPattern& pattern, const Eigen::MatrixXd& l0,
                            const NewtonConfig& cfg = {});

struct SupportReport {
  double max_outside = 0.0;          // |L| off the pattern
  double max_inverse_outside = 0.0;  // |L^{-1}| off the pattern
  double threshold = 1e-8;
  bool pass() const { return max_outside < threshold && max_inverse_outside < threshold; }
};

SupportReport verify_support(const Eigen::MatrixXd& l, const SupportPattern& pattern, double threshold = 1e-8);

/// Perturbs |H| of c by eps with the given seed and solves from the
/// unperturbed connection Laplacian.
struct NewtonRun {
  NewtonResult result;
  SupportReport support;
  double distance_from_start = 0.0;  // ‖L - L0‖_∞
};
NewtonRun run_newton(const Complex& c, double eps, std::uint64_t seed, const NewtonConfig& cfg = {});

}  // namespace connlap
