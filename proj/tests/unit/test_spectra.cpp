// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "connlap/bounds.hpp"
#include "connlap/eigen_sym.hpp"
#include "connlap/generators.hpp"
#include "connlap/operators.hpp"
#include "connlap/spectral_checks.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace connlap;
using namespace connlap::testing;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.uniform(-3, 3);
  return m;
}

}  // namespace

TEST_CASE("Jacobi eigenvalues agree with a reference solver") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Eigen::MatrixXd m = random_symmetric(1 + static_cast<int>(seed % 17), seed);
    const auto ours = eig_sym(m).eigenvalues;
    const auto ref = reference_eigenvalues(m);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(ours[i] == doctest::Approx(ref[i]).epsilon(1e-9));
  }
}

TEST_CASE("eigenvectors diagonalize") {
  const Eigen::MatrixXd m = random_symmetric(12, 5);
  const EigenDecomposition d = eig_sym_vectors(m);
  const Eigen::VectorXd lambda = Eigen::Map<const Eigen::VectorXd>(d.spectrum.eigenvalues.data(), 12);
  CHECK((m * d.vectors - d.vectors * lambda.asDiagonal()).norm() < 1e-9);
  CHECK((d.vectors.transpose() * d.vectors - Eigen::MatrixXd::Identity(12, 12)).norm() < 1e-10);
}

TEST_CASE("eigensolver input validation and limits") {
  Eigen::MatrixXd m = random_symmetric(4, 1);
  m(0, 1) += 1e-6;
  CHECK_THROWS_AS(eig_sym(m), std::invalid_argument);
  CHECK_THROWS_AS(eig_sym(Eigen::MatrixXd(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(eig_sym(random_symmetric(30, 2), 1e-10, 1), ConvergenceError);
  CHECK(eig_sym(Eigen::MatrixXd::Zero(3, 3)).radius() == 0.0);
}

TEST_CASE("exact walk counts agree with enumeration") {
  for (const char* spec : {"path:4", "cycle:5", "star:3", "figure8", "complete:4", "wheel:4", "gnm:8,11:seed=3"}) {
    const Graph g = generate(spec);
    for (int k = 1; k <= 4; ++k) CHECK(max_walk_count(g, k) == enumerate_max_walks(Complex(g), k).get_str());
  }
}

TEST_CASE("closed forms of the bound estimators") {
  const Graph c4 = gen::cycle(4);
  CHECK(bound_dual_vertex(c4).value == doctest::Approx(5.0 - 1.0 / 5.0));
  CHECK(bound_trivial(c4).value == 4.0);
  CHECK(bound_anderson_morley(c4).value == 4.0);
  CHECK(bound_lsc(c4).value == doctest::Approx(4.0 - 1.0 / (4.0 * 5.0)));
  CHECK_FALSE(bound_lsc(c4).applicable);
  CHECK(bound_shi(gen::path(3)).value == doctest::Approx(4.0 - 2.0 / (5.0 * 3.0)));
  // K2: G' has 2 edges, u = 1 + (sqrt(17) - 1) / 2.
  const double u = 1.0 + (std::sqrt(17.0) - 1.0) / 2.0;
  CHECK(bound_bhs(gen::complete(2)).value == doctest::Approx(u - 1.0 / u));
  CHECK_FALSE(bound_dual_vertex(gen::empty(3)).applicable);
  CHECK(std::isnan(bound_dual_vertex(gen::empty(3)).value));
}

TEST_CASE("LSC on a disconnected graph is the maximum over components") {
  const Graph g = disjoint_union(gen::star(3), gen::path(3));
  const Bound b = bound_lsc(g);
  CHECK(b.per_component);
  CHECK(b.applicable);
  CHECK(b.value == doctest::Approx(bound_lsc(gen::star(3)).value));
  CHECK_FALSE(bound_lsc(disjoint_union(gen::cycle(3), gen::path(3))).applicable);
}

TEST_CASE("bounds are sound on the corpus") {
  for (const auto& g : full_corpus()) {
    CAPTURE(g.name());
    const auto r = bounds_report(g, {1, 2, 3, 6});
    for (const auto& c : soundness(r)) CHECK_MESSAGE(c.pass, c.detail);
    CHECK(r.rho <= r.rho_abs + 1e-9);
  }
}

TEST_CASE("bounds report without full operators") {
  const auto r = bounds_report(gen::cycle(5), {3}, false);
  CHECK(std::isnan(r.rho_L));
  CHECK(std::isnan(r.rho_habs_full));
  CHECK(all_pass(soundness(r)));
}

TEST_CASE("Schur majorization of the connection Laplacian") {
  const OperatorBundle ops = build_operators(Complex(gen::figure_eight()));
  const SchurReport r =
      schur_check(eig_sym(ops.connection.to_double()), eig_sym(ops.hodge_signless.to_double()), 4);
  CHECK(r.max_partial_excess <= 1e-8);
  CHECK(r.trace_error < 1e-8);
  CHECK(r.lambda_max_habs >= 4);
}

TEST_CASE("spectral function and the barycentric limit") {
  Spectrum s;
  s.eigenvalues = {0.0, 1.0, 2.0, 3.0};
  const SpectralFunction f(s);
  CHECK(f(0.01) == 0.0);
  CHECK(f(0.25) == 0.0);
  CHECK(f(0.26) == 1.0);
  CHECK(f(1.0) == 3.0);
  CHECK(barycentric_limit(1.0) == doctest::Approx(4.0));
  CHECK(barycentric_limit(0.5) == doctest::Approx(2.0));
  CHECK(doubling_map(1.0) == 3.0);
  CHECK(functional_equation_residual(100) < 1e-12);
  // The exact sampling on C(40) beats the O(1/n) step error.
  const auto h0 = build_operators(Complex(gen::cycle(40))).kirchhoff.to_double();
  CHECK(sup_distance_to_limit(SpectralFunction(eig_sym(h0))) < 4.0 * std::numbers::pi / 80.0 + 1e-9);
}
