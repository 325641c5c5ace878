// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "connlap/complex.hpp"
#include "connlap/field_matrix.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap {

using IntVector = std::vector<Integer>;

/// Exact states ψ(n) keyed by (possibly negative) time.
struct Trajectory {
  std::map<long long, IntVector> states;
  std::string provenance;
};

/// ψ(n) = L^n ψ0 for n_min <= n <= n_max; negative times use the exact
/// integer inverse. Throws std::domain_error when L is not unimodular.
Trajectory walk(const IntMatrix& l, const IntVector& psi0, long long n_min, long long n_max);
Trajectory walk(const IntMatrix& l, const IntMatrix& l_inv, const IntVector& psi0, long long n_min,
                long long n_max);

/// max over n with n-2, n, n+2 recorded of
/// |ψ(n+2) - 2ψ(n) + ψ(n-2) - |H|^2 ψ(n)|_∞. Throws std::invalid_argument
/// when no such n exists.
Integer jacobi_residual(const Trajectory& t, const IntMatrix& habs);

/// L^2 - 2I + L^{-2} - |H|^2.
IntMatrix jacobi_operator_residual(const IntMatrix& l, const IntMatrix& l_inv, const IntMatrix& habs);

struct QuaternionField {
  IntVector psi0, psi1, psi2, psi3;
};

/// The four branch families over |m| <= N: L^{2m} ψ0 and L^{-2m} ψ1 at even
/// times 2m, L^{2m+1} ψ2 and L^{-2m-1} ψ3 at odd times 2m + 1.
std::array<Trajectory, 4> quaternion_solution(const Complex& c, const QuaternionField& q, int N);

/// Pointwise sum of the four branches (missing times count as zero).
Trajectory combine(const std::array<Trajectory, 4>& branches);

/// 4n: the recursion u(n+2) = (2 + |H|^2) u(n) - u(n-2) is solved uniquely
/// forwards and backwards from u(0), u(1), u(2), u(3).
int solution_space_dimension(const Complex& c);

/// Rank of q -> (u(0), u(1), u(2), u(3)) for the combined branch solution.
int quaternion_span_rank(const Complex& c);

struct PerronResult {
  double rho = 0.0;        // ρ(L)
  double min_abs = 0.0;    // smallest |eigenvalue| of L
  double min_eig = 0.0;    // the eigenvalue achieving it
  Eigen::VectorXd v, w;    // unit; v > 0
  std::vector<double> forward_residual;   // ‖L^{2n}/ρ^{2n} - v v^T‖_F, n = 1..max_n
  std::vector<double> backward_residual;  // ‖L^{-2n}/ρ^{2n} - w w^T‖_F
};

/// Requires a connected connection graph (irreducible L); throws
/// std::invalid_argument otherwise. Powers are exact and scaled at the end.
PerronResult perron_limits(const IntMatrix& l, int max_n);

struct AutomatonState {
  std::uint64_t modulus = 2;
  std::vector<std::uint64_t> values;
  long long time = 0;
  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

/// States at times n_min..n_max (ascending); s0 sits at time s0.time.
std::vector<AutomatonState> automaton_run(const FieldMatrix& l, const AutomatonState& s0, long long n_min,
                                          long long n_max);

/// Smallest k >= 1 with L^k s = s, searched up to max_steps.
std::optional<std::uint64_t> automaton_period(const FieldMatrix& l, const std::vector<std::uint64_t>& s,
                                              std::uint64_t max_steps);

/// L - L^{-1} ≡ |H| (mod p).
bool hydrogen_mod_p(const IntMatrix& l, const IntMatrix& habs, std::uint64_t p);

struct EnvironmentSequence {
  std::vector<Eigen::MatrixXd> operators;
  std::vector<int> omega;  // 0-based indices into operators
};

struct CocycleResult {
  double lyapunov = 0.0;
  /// log ‖ψ(n)‖_∞ for n = 0..N.
  std::vector<double> log_norms;
  Eigen::VectorXd final_direction;  // ψ(N) / ‖ψ(N)‖_∞
};

inline constexpr int kRenormalizeEvery = 16;

/// ψ(n) = L_{ω(n)} ... L_{ω(1)} ψ(0); rescaled by the max norm every 16 steps
/// with the scales kept in log space. Lyapunov = log ‖ψ(N)‖ / N.
CocycleResult cocycle(const EnvironmentSequence& env, const Eigen::VectorXd& psi0, int N);

struct GrowthLink {
  double rho_L = 0.0;
  double log_rho_L = 0.0;
  double rho_habs = 0.0;
  double rho_L_minus_inverse = 0.0;  // ρ(L) - 1/ρ(L)
  double rho_line_graph = 0.0;       // ρ(A(G_L)), descriptive
};

GrowthLink growth_link(const Complex& c);

std::vector<std::string> format_state(const IntVector& v);

}  // namespace connlap
