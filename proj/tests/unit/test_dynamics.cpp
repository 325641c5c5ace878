// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "connlap/dynamics.hpp"
#include "connlap/field_matrix.hpp"
#include "connlap/generators.hpp"
#include "connlap/operators.hpp"
#include "corpus.hpp"

using namespace connlap;

namespace {

IntVector ramp(int n) {
  IntVector v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (i % 3) - 1;
  return v;
}

}  // namespace

TEST_CASE("walks run forwards and backwards exactly") {
  const OperatorBundle ops = build_operators(Complex(gen::figure_eight()));
  const IntVector psi0 = ramp(ops.connection.rows());
  const Trajectory t = walk(ops.connection, psi0, -5, 5);
  CHECK(t.states.size() == 11);
  CHECK(t.states.at(0) == psi0);
  CHECK(t.states.at(1) == ops.connection * psi0);
  CHECK(t.states.at(-1) == ops.green * psi0);
  CHECK(ops.connection * t.states.at(-3) == t.states.at(-2));
  CHECK_THROWS_AS(walk(IntMatrix{{2}}, IntVector{Integer(1)}, -1, 1), std::domain_error);
}

TEST_CASE("Jacobi equation on trajectories and operators") {
  for (const char* spec : {"cycle:4", "figure8", "star:3", "complete:4", "gnm:9,13:seed=5"}) {
    const OperatorBundle ops = build_operators(Complex(generate(spec)));
    CHECK(jacobi_operator_residual(ops.connection, ops.green, ops.hodge_signless).is_zero());
    const Trajectory t = walk(ops.connection, ops.green, ramp(ops.connection.rows()), -6, 6);
    CHECK(jacobi_residual(t, ops.hodge_signless) == 0);
  }
  Trajectory tiny;
  tiny.states[0] = IntVector{Integer(1)};
  CHECK_THROWS_AS(jacobi_residual(tiny, IntMatrix{{1}}), std::invalid_argument);
}

TEST_CASE("Jacobi residual sees a corrupted state") {
  const OperatorBundle ops = build_operators(Complex(gen::cycle(4)));
  Trajectory t = walk(ops.connection, ops.green, ramp(8), -3, 3);
  t.states[0][0] += 1;
  CHECK(jacobi_residual(t, ops.hodge_signless) != 0);
}

TEST_CASE("four-branch solutions") {
  for (const char* spec : {"cycle:4", "complete:2", "figure8"}) {
    const Complex c(generate(spec));
    const OperatorBundle ops = build_operators(c);
    const int n = c.size();
    const QuaternionField q{ramp(n), IntVector(static_cast<std::size_t>(n), Integer(1)), ramp(n),
                            IntVector(static_cast<std::size_t>(n), Integer(-1))};
    const auto branches = quaternion_solution(c, q, 4);
    const Trajectory sum = combine(branches);
    CHECK(jacobi_residual(sum, ops.hodge_signless) == 0);
    CHECK(solution_space_dimension(c) == 4 * n);
    CHECK(quaternion_span_rank(c) <= 4 * n);
  }
  // For K2 the span is 2n + 2 rank|H| = 6 + 4.
  CHECK(quaternion_span_rank(Complex(gen::complete(2))) == 10);
}

TEST_CASE("Perron limits") {
  const PerronResult r = perron_limits(build_operators(Complex(gen::cycle(4))).connection, 30);
  CHECK(r.rho == doctest::Approx(2.0 + std::sqrt(5.0)));
  CHECK(r.v.minCoeff() > 0);
  CHECK(r.forward_residual.size() == 30);
  CHECK(r.forward_residual.back() < 1e-6);
  CHECK(r.forward_residual.back() < r.forward_residual.front());
  CHECK((r.w.array() > 0).any());
  CHECK((r.w.array() < 0).any());
  CHECK_THROWS_AS(perron_limits(build_operators(Complex(disjoint_union(gen::path(2), gen::path(2)))).connection, 3),
                  std::invalid_argument);
}

TEST_CASE("automaton over prime fields is reversible") {
  const OperatorBundle ops = build_operators(Complex(gen::figure_eight()));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldMatrix l = field_reduce(ops.connection, p);
    AutomatonState s0{p, std::vector<std::uint64_t>(15, 0), 0};
    s0.values[3] = 1;
    const auto fwd = automaton_run(l, s0, 0, 10);
    CHECK(fwd.size() == 11);
    CHECK(fwd.front() == s0);
    CHECK(fwd.back().time == 10);
    const auto back = automaton_run(l, fwd.back(), 0, 10);
    CHECK(back.front() == s0);
    CHECK(hydrogen_mod_p(ops.connection, ops.hodge_signless, p));
    const auto period = automaton_period(l, s0.values, 100000);
    REQUIRE(period.has_value());
    const auto again = automaton_run(l, s0, 0, static_cast<long long>(*period));
    CHECK(again.back().values == s0.values);
  }
}

TEST_CASE("cocycle growth") {
  const OperatorBundle ops = build_operators(Complex(gen::cycle(4)));
  EnvironmentSequence env;
  env.operators = {ops.connection.to_double()};
  env.omega.assign(200, 0);
  const CocycleResult r = cocycle(env, Eigen::VectorXd::Ones(8), 200);
  CHECK(r.log_norms.size() == 201);
  CHECK(r.lyapunov == doctest::Approx(std::log(2.0 + std::sqrt(5.0))).epsilon(1e-2));
  CHECK(r.final_direction.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
}

TEST_CASE("growth rate links the two spectral radii") {
  for (const char* spec : {"cycle:5", "figure8", "wheel:5", "path:4"}) {
    const GrowthLink g = growth_link(Complex(generate(spec)));
    CHECK(g.rho_habs == doctest::Approx(g.rho_L_minus_inverse).epsilon(1e-10));
    CHECK(g.log_rho_L == doctest::Approx(std::log(g.rho_L)));
    CHECK(g.rho_line_graph == doctest::Approx(g.rho_L - 1.0 / g.rho_L - 2.0).epsilon(1e-9));
  }
}

TEST_CASE("state formatting") {
  CHECK(format_state(IntVector{Integer(1), Integer(-2)}) == std::vector<std::string>{"1", "-2"});
}
