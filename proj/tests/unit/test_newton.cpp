// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "connlap/generators.hpp"
#include "connlap/newton.hpp"
#include "connlap/operators.hpp"

using namespace connlap;

TEST_CASE("support pattern") {
  const Complex c(gen::path(3));
  const SupportPattern p = SupportPattern::of(c);
  CHECK(p.size() == 5);
  CHECK(p(0, 3));   // vertex 0 lies in edge 01
  CHECK_FALSE(p(0, 1));
  CHECK(p(3, 4));   // edges 01 and 12 share vertex 1
  CHECK(p.coordinates().size() == 5 + 4 + 1);  // diagonal, incidences, meeting edges
  CHECK_THROWS(SupportPattern(2, {1, 1, 0, 1}));
  CHECK_THROWS(SupportPattern(2, {0, 0, 0, 1}));
  CHECK_THROWS(SupportPattern(2, {1, 1}));
}

TEST_CASE("perturbed targets are symmetric, seeded and supported on the pattern") {
  const Complex c(gen::cycle(5));
  const OperatorBundle ops = build_operators(c);
  const SupportPattern p = SupportPattern::of(c);
  const Eigen::MatrixXd base = ops.hodge_signless.to_double();
  const Eigen::MatrixXd k = perturb_target(ops.hodge_signless, p, 0.01, 3);
  CHECK((k - k.transpose()).norm() == 0.0);
  CHECK(k == perturb_target(ops.hodge_signless, p, 0.01, 3));
  CHECK_FALSE(k == perturb_target(ops.hodge_signless, p, 0.01, 4));
  CHECK((k - base).cwiseAbs().maxCoeff() <= 0.01);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (!p(i, j)) CHECK(k(i, j) == base(i, j));
  CHECK(perturb_target(ops.hodge_signless, p, 0.0, 3) == base);
  CHECK_THROWS(perturb_target(ops.hodge_signless, p, -1.0, 3));
}

TEST_CASE("trees converge quadratically from the connection Laplacian") {
  for (const char* spec : {"path:4", "star:3"})
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const NewtonRun run = run_newton(Complex(generate(spec)), 0.01, seed);
      CHECK(run.result.converged());
      CHECK(run.result.iterations <= 20);
      CHECK(run.result.residual < 1e-10);
      CHECK(run.support.max_outside == 0.0);
      CHECK(run.distance_from_start < 0.1);
    }
}

TEST_CASE("unperturbed trees need no step") {
  const NewtonRun run = run_newton(Complex(gen::path(4)), 0.0, 1);
  CHECK(run.result.converged());
  CHECK(run.result.iterations == 0);
}

TEST_CASE("the inverse of a connection Laplacian leaves the intersection pattern") {
  // Adjacent vertices are disjoint simplices, yet g = -1 there.
  const Complex c(gen::complete(2));
  const SupportReport s = verify_support(build_operators(c).connection.to_double(), SupportPattern::of(c));
  CHECK(s.max_outside == 0.0);
  CHECK(s.max_inverse_outside == doctest::Approx(1.0));
  CHECK_FALSE(s.pass());
}

TEST_CASE("cycles give a singular Jacobian at the connection Laplacian") {
  const NewtonRun run = run_newton(Complex(gen::cycle(4)), 0.01, 1);
  CHECK(run.result.status == NewtonStatus::singular_jacobian);
  CHECK(run.result.sigma_min <= 1e-10 * run.result.sigma_max);
  CHECK(std::string(to_string(run.result.status)) == "singular_jacobian");
}

TEST_CASE("solver argument checks") {
  const Complex c(gen::path(2));
  const SupportPattern p = SupportPattern::of(c);
  const Eigen::MatrixXd l = build_operators(c).connection.to_double();
  NewtonConfig bad;
  bad.tol = 0;
  CHECK_THROWS(solve_hydrogen(l, p, l, bad));
  CHECK_THROWS(solve_hydrogen(Eigen::MatrixXd::Zero(2, 2), p, l));
  CHECK_THROWS(solve_hydrogen(l, p, Eigen::MatrixXd::Zero(3, 3)));
}
