// SPDX-License-Identifier: Apache-2.0
#include "connlap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "connlap/eigen_sym.hpp"
#include "connlap/exact_linalg.hpp"
#include "connlap/operators.hpp"

namespace connlap {

Trajectory walk(const IntMatrix& l, const IntMatrix& l_inv, const IntVector& psi0, long long n_min,
                long long n_max) {
  if (n_min > 0 || n_max < 0) throw std::invalid_argument("walk: need n_min <= 0 <= n_max");
  if (static_cast<int>(psi0.size()) != l.cols()) throw std::invalid_argument("walk: dimension mismatch");
  Trajectory t;
  t.provenance = "exact";
  t.states[0] = psi0;
  IntVector cur = psi0;
  for (long long n = 1; n <= n_max; ++n) t.states[n] = cur = l * cur;
  cur = psi0;
  for (long long n = -1; n >= n_min; --n) t.states[n] = cur = l_inv * cur;
  return t;
}

Trajectory walk(const IntMatrix& l, const IntVector& psi0, long long n_min, long long n_max) {
  return walk(l, inverse_integral(l), psi0, n_min, n_max);
}

Integer jacobi_residual(const Trajectory& t, const IntMatrix& habs) {
  const IntMatrix habs_sq = habs * habs;
  bool any = false;
  Integer worst = 0;
  for (const auto& [n, psi] : t.states) {
    auto prev = t.states.find(n - 2);
    auto next = t.states.find(n + 2);
    if (prev == t.states.end() || next == t.states.end()) continue;
    any = true;
    const IntVector rhs = habs_sq * psi;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const Integer r = next->second[i] - 2 * psi[i] + prev->second[i] - rhs[i];
      if (mpz_cmpabs(r.get_mpz_t(), worst.get_mpz_t()) > 0) worst = ::abs(r);
    }
  }
  if (!any) throw std::invalid_argument("jacobi_residual: trajectory has no n with n-2 and n+2 recorded");
  return worst;
}

IntMatrix jacobi_operator_residual(const IntMatrix& l, const IntMatrix& l_inv, const IntMatrix& habs) {
  return l * l - 2L * IntMatrix::identity(l.rows()) + l_inv * l_inv - habs * habs;
}

std::array<Trajectory, 4> quaternion_solution(const Complex& c, const QuaternionField& q, int N) {
  if (N < 1) throw std::invalid_argument("quaternion_solution: need N >= 1");
  const std::size_t n = c.size();
  for (const IntVector* psi : {&q.psi0, &q.psi1, &q.psi2, &q.psi3})
    if (psi->size() != n) throw std::invalid_argument("quaternion_solution: vector length mismatch");
  const IntMatrix l = connection_laplacian(c);
  const IntMatrix l_inv = inverse_integral(l);
  const IntMatrix l2 = l * l;
  const IntMatrix l_inv2 = l_inv * l_inv;

  // Branch b at time t = 2m (+1 for odd branches): forward uses L^t,
  // backward uses L^{-t}.
  std::array<Trajectory, 4> out;
  const std::array<const IntVector*, 4> init{&q.psi0, &q.psi1, &q.psi2, &q.psi3};
  for (int b = 0; b < 4; ++b) {
    const bool odd = b >= 2;
    const bool forward = b % 2 == 0;
    const IntMatrix& step_up = forward ? l2 : l_inv2;      // t -> t + 2
    const IntMatrix& step_down = forward ? l_inv2 : l2;    // t -> t - 2
    IntVector base = *init[b];
    if (odd) base = forward ? l * base : l_inv * base;
    Trajectory& t = out[b];
    t.provenance = std::string(forward ? "L^t" : "L^-t") + (odd ? " psi(odd)" : " psi(even)");
    const long long t0 = odd ? 1 : 0;
    t.states[t0] = base;
    IntVector cur = base;
    for (int m = 1; m <= N; ++m) t.states[t0 + 2 * m] = cur = step_up * cur;
    cur = base;
    for (int m = 1; m <= N; ++m) t.states[t0 - 2 * m] = cur = step_down * cur;
  }
  return out;
}

Trajectory combine(const std::array<Trajectory, 4>& branches) {
  Trajectory sum;
  sum.provenance = "quaternion sum";
  for (const auto& b : branches)
    for (const auto& [n, psi] : b.states) {
      auto [it, inserted] = sum.states.emplace(n, psi);
      if (!inserted)
        for (std::size_t i = 0; i < psi.size(); ++i) it->second[i] += psi[i];
    }
  // Fill sublattice gaps with zeros so every branch time is a full state.
  if (!sum.states.empty()) {
    const std::size_t n = sum.states.begin()->second.size();
    const long long lo = sum.states.begin()->first, hi = sum.states.rbegin()->first;
    for (long long t = lo; t <= hi; ++t) sum.states.emplace(t, IntVector(n, 0));
  }
  return sum;
}

int solution_space_dimension(const Complex& c) { return 4 * c.size(); }

int quaternion_span_rank(const Complex& c) {
  const int n = c.size();
  const IntMatrix l = connection_laplacian(c);
  const IntMatrix li = inverse_integral(l);
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix l2 = l * l, li2 = li * li;
  const IntMatrix l3 = l2 * l, li3 = li2 * li;
  // Rows: u(0), u(1), u(2), u(3); columns: psi0..psi3.
  const IntMatrix* blocks[4][4] = {{&id, &id, nullptr, nullptr},
                                   {nullptr, nullptr, &l, &li},
                                   {&l2, &li2, nullptr, nullptr},
                                   {nullptr, nullptr, &l3, &li3}};
  IntMatrix m(4 * n, 4 * n);
  for (int bi = 0; bi < 4; ++bi)
    for (int bj = 0; bj < 4; ++bj) {
      if (!blocks[bi][bj]) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = (*blocks[bi][bj])(i, j);
    }
  return rank(m);
}

namespace {

bool irreducible(const IntMatrix& l) {
  std::vector<Edge> edges;
  for (int i = 0; i < l.rows(); ++i)
    for (int j = i + 1; j < l.cols(); ++j)
      if (sgn(l(i, j)) != 0) edges.emplace_back(i, j);
  return Graph(l.rows(), std::move(edges)).is_connected();
}

}  // namespace

PerronResult perron_limits(const IntMatrix& l, int max_n) {
  if (!l.is_square() || !l.is_symmetric()) throw std::invalid_argument("perron_limits: need symmetric L");
  if (!irreducible(l))
    throw std::invalid_argument("perron_limits: L is reducible; run it per connected component");
  const int n = l.rows();
  const EigenDecomposition ed = eig_sym_vectors(l.to_double());
  PerronResult r;
  r.rho = ed.spectrum.max();
  r.v = ed.vectors.col(n - 1);
  if (r.v.sum() < 0) r.v = -r.v;
  int wi = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(ed.spectrum.eigenvalues[i]) < std::abs(ed.spectrum.eigenvalues[wi])) wi = i;
  r.min_eig = ed.spectrum.eigenvalues[wi];
  r.min_abs = std::abs(r.min_eig);
  r.w = ed.vectors.col(wi);
  // Make the largest-magnitude entry of w positive for a reproducible sign.
  Eigen::Index big = 0;
  r.w.cwiseAbs().maxCoeff(&big);
  if (r.w(big) < 0) r.w = -r.w;

  const IntMatrix l2 = l * l;
  const IntMatrix li2 = [&] {
    const IntMatrix li = inverse_integral(l);
    return li * li;
  }();
  const Eigen::MatrixXd pv = r.v * r.v.transpose();
  const Eigen::MatrixXd pw = r.w * r.w.transpose();
  IntMatrix fwd = IntMatrix::identity(n), bwd = IntMatrix::identity(n);
  const double log_rho2 = 2.0 * std::log(r.rho);
  for (int k = 1; k <= max_n; ++k) {
    fwd = fwd * l2;
    bwd = bwd * li2;
    const double scale = std::exp(-log_rho2 * k);
    r.forward_residual.push_back((fwd.to_double() * scale - pv).norm());
    r.backward_residual.push_back((bwd.to_double() * scale - pw).norm());
  }
  return r;
}

std::vector<AutomatonState> automaton_run(const FieldMatrix& l, const AutomatonState& s0, long long n_min,
                                          long long n_max) {
  if (l.modulus() != s0.modulus) throw std::invalid_argument("automaton_run: modulus mismatch");
  if (static_cast<int>(s0.values.size()) != l.cols()) throw std::invalid_argument("automaton_run: dimension mismatch");
  if (n_min > s0.time || n_max < s0.time) throw std::invalid_argument("automaton_run: range must contain s0.time");
  const FieldMatrix inv = field_inverse(l);
  std::map<long long, std::vector<std::uint64_t>> states;
  std::vector<std::uint64_t> start(s0.values.size());
  for (std::size_t i = 0; i < start.size(); ++i) start[i] = s0.values[i] % s0.modulus;
  states[s0.time] = start;
  std::vector<std::uint64_t> cur = start;
  for (long long n = s0.time + 1; n <= n_max; ++n) states[n] = cur = field_matvec(l, cur);
  cur = start;
  for (long long n = s0.time - 1; n >= n_min; --n) states[n] = cur = field_matvec(inv, cur);
  std::vector<AutomatonState> out;
  out.reserve(states.size());
  for (auto& [n, v] : states) out.push_back({s0.modulus, std::move(v), n});
  return out;
}

std::optional<std::uint64_t> automaton_period(const FieldMatrix& l, const std::vector<std::uint64_t>& s,
                                              std::uint64_t max_steps) {
  std::vector<std::uint64_t> start(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) start[i] = s[i] % l.modulus();
  std::vector<std::uint64_t> cur = start;
  for (std::uint64_t k = 1; k <= max_steps; ++k) {
    cur = field_matvec(l, cur);
    if (cur == start) return k;
  }
  return std::nullopt;
}

bool hydrogen_mod_p(const IntMatrix& l, const IntMatrix& habs, std::uint64_t p) {
  const FieldMatrix lp = field_reduce(l, p);
  return field_sub(lp, field_inverse(lp)) == field_reduce(habs, p);
}

CocycleResult cocycle(const EnvironmentSequence& env, const Eigen::VectorXd& psi0, int N) {
  if (env.operators.empty()) throw std::invalid_argument("cocycle: no operators registered");
  if (N < 1 || static_cast<int>(env.omega.size()) < N)
    throw std::invalid_argument("cocycle: environment shorter than N");
  const Eigen::Index dim = env.operators.front().rows();
  for (const auto& op : env.operators)
    if (op.rows() != dim || op.cols() != dim) throw std::invalid_argument("cocycle: operator dimension mismatch");
  if (psi0.size() != dim) throw std::invalid_argument("cocycle: initial vector dimension mismatch");
  for (int idx : env.omega)
    if (idx < 0 || idx >= static_cast<int>(env.operators.size()))
      throw std::invalid_argument("cocycle: environment index out of range");
  const double norm0 = psi0.cwiseAbs().maxCoeff();
  if (!(norm0 > 0.0)) throw std::invalid_argument("cocycle: zero initial vector");

  CocycleResult r;
  Eigen::VectorXd psi = psi0;
  double log_scale = 0.0;
  r.log_norms.push_back(std::log(norm0));
  for (int n = 1; n <= N; ++n) {
    psi = env.operators[env.omega[n - 1]] * psi;
    const double norm = psi.cwiseAbs().maxCoeff();
    r.log_norms.push_back(log_scale + std::log(norm));
    if (n % kRenormalizeEvery == 0) {
      log_scale += std::log(norm);
      psi /= norm;
    }
  }
  r.lyapunov = r.log_norms.back() / N;
  r.final_direction = psi / psi.cwiseAbs().maxCoeff();
  return r;
}

GrowthLink growth_link(const Complex& c) {
  GrowthLink g;
  const OperatorBundle ops = build_operators(c);
  g.rho_L = eig_sym(ops.connection.to_double()).max();
  g.log_rho_L = std::log(g.rho_L);
  g.rho_habs = eig_sym(ops.hodge_signless.to_double()).max();
  g.rho_L_minus_inverse = g.rho_L - 1.0 / g.rho_L;
  const Graph lg = line_graph(c.graph());
  if (lg.vertex_count() > 0) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(lg.vertex_count(), lg.vertex_count());
    for (const auto& [x, y] : lg.edges()) a(x, y) = a(y, x) = 1.0;
    g.rho_line_graph = eig_sym(a).max();
  }
  return g;
}

std::vector<std::string> format_state(const IntVector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace connlap
