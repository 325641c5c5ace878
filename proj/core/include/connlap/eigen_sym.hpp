// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

namespace connlap {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  int matrix_dim = 0;
  /// Final off-diagonal Frobenius norm relative to the matrix norm.
  double tolerance_achieved = 0.0;
  int sweeps = 0;

  double max() const { return eigenvalues.back(); }
  double min() const { return eigenvalues.front(); }
  /// Largest |eigenvalue|.
  double radius() const;
};

struct EigenDecomposition {
  Spectrum spectrum;
  /// Column i is a unit eigenvector for spectrum.eigenvalues[i].
  Eigen::MatrixXd vectors;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kEigTolerance = 1e-10;
inline constexpr int kEigMaxSweeps = 100;

/// Cyclic Jacobi rotations. Requires |m - m^T| <= 1e-12 |m| (Frobenius);
/// stops once the off-diagonal part is below tol |m|. Throws
/// std::invalid_argument for non-symmetric input and ConvergenceError when
/// max_sweeps is exhausted.
EigenDecomposition eig_sym_vectors(const Eigen::MatrixXd& m, double tol = kEigTolerance,
                                   int max_sweeps = kEigMaxSweeps);
Spectrum eig_sym(const Eigen::MatrixXd& m, double tol = kEigTolerance,
                 int max_sweeps = kEigMaxSweeps);

}  // namespace connlap
