// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "connlap/check.hpp"
#include "connlap/eigen_sym.hpp"

namespace connlap {

struct SchurReport {
  /// max over t of (Σ_{i<=t} λ_i - t), ascending order; <= 0 when the
  /// majorization holds.
  double max_partial_excess = 0.0;
  /// |Σ λ_i - n|.
  double trace_error = 0.0;
  double top_gap = 0.0;  // λ_n(L) - λ_{n-1}(L); +inf when n = 1
  double lambda_max_habs = 0.0;
  int max_degree = 0;
  std::vector<Check> checks;
};

/// Partial sums of the ascending spectrum of L against t, the top gap of L
/// against 1, and λ_max(|H|) against the max degree, all with slack tol.
SchurReport schur_check(const Spectrum& l_spec, const Spectrum& habs_spec, int max_degree,
                        double tol = 1e-8);

/// Step function F(x) = λ_{ceil(n x)} on (0, 1] of an ascending spectrum.
class SpectralFunction {
 public:
  explicit SpectralFunction(Spectrum s);
  double operator()(double x) const;
  int size() const { return static_cast<int>(s_.eigenvalues.size()); }
  const Spectrum& spectrum() const { return s_; }

 private:
  Spectrum s_;
};

/// 4 sin^2(π x / 2).
double barycentric_limit(double x);
/// T(y) = y (4 - y).
double doubling_map(double y);

/// sup over x in (0, 1] of |F(x) - 4 sin^2(π x / 2)|, exact for the step
/// function: the limit is increasing, so on each step the sup sits at an
/// endpoint.
double sup_distance_to_limit(const SpectralFunction& f);

/// max |F(2x) - T(F(x))| over x_i = i / (2 (samples + 1)), i = 1..samples,
/// for the limit function F.
double functional_equation_residual(int samples);

}  // namespace connlap
