// SPDX-License-Identifier: Apache-2.0
#include "connlap/spectral_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace connlap {

SchurReport schur_check(const Spectrum& l_spec, const Spectrum& habs_spec, int max_degree, double tol) {
  SchurReport r;
  const auto& ev = l_spec.eigenvalues;
  const int n = static_cast<int>(ev.size());
  double partial = 0.0;
  r.max_partial_excess = -std::numeric_limits<double>::infinity();
  for (int t = 1; t <= n; ++t) {
    partial += ev[t - 1];
    r.max_partial_excess = std::max(r.max_partial_excess, partial - t);
  }
  r.trace_error = std::abs(partial - n);
  r.top_gap = n >= 2 ? ev[n - 1] - ev[n - 2] : std::numeric_limits<double>::infinity();
  r.lambda_max_habs = habs_spec.max();
  r.max_degree = max_degree;

  r.checks.push_back({"partial_sums", r.max_partial_excess <= tol,
                      "max excess " + std::to_string(r.max_partial_excess)});
  r.checks.push_back({"trace_equality", r.trace_error <= tol, "error " + std::to_string(r.trace_error)});
  r.checks.push_back({"top_gap", r.top_gap >= 1.0 - tol, "gap " + std::to_string(r.top_gap)});
  r.checks.push_back({"habs_top_vs_degree", r.lambda_max_habs >= max_degree - tol,
                      "lambda_max(|H|) " + std::to_string(r.lambda_max_habs) + ", d " +
                          std::to_string(max_degree)});
  return r;
}

SpectralFunction::SpectralFunction(Spectrum s) : s_(std::move(s)) {
  if (s_.eigenvalues.empty()) throw std::invalid_argument("spectral function of an empty spectrum");
}

double SpectralFunction::operator()(double x) const {
  const int n = size();
  int k = static_cast<int>(std::ceil(n * x));
  k = std::clamp(k, 1, n);
  return s_.eigenvalues[k - 1];
}

double barycentric_limit(double x) {
  const double s = std::sin(std::numbers::pi * x / 2.0);
  return 4.0 * s * s;
}

double doubling_map(double y) { return y * (4.0 - y); }

double sup_distance_to_limit(const SpectralFunction& f) {
  const int n = f.size();
  double sup = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double lambda = f.spectrum().eigenvalues[k - 1];
    const double lo = barycentric_limit(static_cast<double>(k - 1) / n);
    const double hi = barycentric_limit(static_cast<double>(k) / n);
    sup = std::max({sup, std::abs(lambda - lo), std::abs(lambda - hi)});
  }
  return sup;
}

double functional_equation_residual(int samples) {
  double worst = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double x = static_cast<double>(i) / (2.0 * (samples + 1));
    worst = std::max(worst, std::abs(barycentric_limit(2.0 * x) - doubling_map(barycentric_limit(x))));
  }
  return worst;
}

}  // namespace connlap
