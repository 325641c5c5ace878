// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "connlap/exact_linalg.hpp"
#include "connlap/generators.hpp"
#include "connlap/operators.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace connlap;
using namespace connlap::testing;

TEST_CASE("operators of an interval") {
  const OperatorBundle ops = build_operators(Complex(gen::complete(2)));
  CHECK(ops.connection == IntMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  CHECK(ops.green == IntMatrix{{0, -1, 1}, {-1, 0, 1}, {1, 1, -1}});
  CHECK(ops.hodge_signless == IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 2}});
  CHECK(ops.hodge == IntMatrix{{1, -1, 0}, {-1, 1, 0}, {0, 0, 2}});
  CHECK(ops.kirchhoff == IntMatrix{{1, -1}, {-1, 1}});
  CHECK(ops.kirchhoff_signless == IntMatrix{{1, 1}, {1, 1}});
}

TEST_CASE("incidence conventions") {
  const Complex c(gen::path(2));
  CHECK(incidence(c) == IntMatrix{{-1, 1}});
  CHECK(incidence(c, true) == IntMatrix{{1, 1}});
  const IntMatrix d = exterior_derivative(c);
  CHECK(d.rows() == 3);
  CHECK(d(2, 0) == -1);
  CHECK(d(2, 1) == 1);
  CHECK((d * d).is_zero());
}

TEST_CASE("signless Hodge agrees with its block description") {
  for (const auto& g : deterministic_corpus()) {
    const Complex c(g);
    CHECK(build_operators(c).hodge_signless == signless_hodge_by_blocks(c));
  }
}

TEST_CASE("Hodge operator is block diagonal with the Kirchhoff block") {
  for (const auto& g : deterministic_corpus()) {
    const OperatorBundle ops = build_operators(Complex(g));
    const int v = g.vertex_count();
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j) CHECK(ops.hodge(i, j) == ops.kirchhoff(i, j));
    for (int i = 0; i < v; ++i)
      for (int j = v; j < ops.hodge.rows(); ++j) CHECK(ops.hodge(i, j) == 0);
  }
}

TEST_CASE("hydrogen identity and Green star formula on the deterministic corpus") {
  for (const auto& g : deterministic_corpus()) {
    CAPTURE(g.name());
    const Complex c(g);
    const OperatorBundle ops = build_operators(c);
    CHECK(hydrogen_residual(ops).is_zero());
    CHECK(green_star(c) == ops.green);
    CHECK(RatMatrix(ops.green) == rational_inverse(ops.connection));
    CHECK(energy(ops) == static_cast<long>(c.euler_characteristic()));
  }
}

TEST_CASE("hydrogen residual detects a broken operator") {
  OperatorBundle ops = build_operators(Complex(gen::cycle(4)));
  ops.hodge_signless(0, 0) += 1;
  CHECK_FALSE(hydrogen_residual(ops).is_zero());
}

TEST_CASE("trace identities") {
  for (const auto& g : deterministic_corpus()) {
    const OperatorBundle ops = build_operators(Complex(g));
    const TraceReport r = trace_identities(ops);
    CHECK(all_pass(r.checks));
    CHECK(r.tr_Habs == 4 * g.edge_count());
    CHECK(r.sum_sphere_chi == r.tr_Habs);
  }
}

TEST_CASE("supersymmetry and Betti numbers") {
  CHECK(betti0(gen::figure_eight()) == 1);
  CHECK(betti1(gen::figure_eight()) == 2);
  CHECK(betti1(gen::complete(4)) == 3);
  CHECK(betti0(disjoint_union(gen::cycle(3), gen::path(2))) == 2);
  for (const auto& g : deterministic_corpus()) {
    const SupersymmetryReport r = dirac_supersymmetry(build_operators(Complex(g)));
    CHECK(all_pass(r.checks));
    CHECK(r.b0 - r.b1 == r.chi);
  }
}

TEST_CASE("operator lookup by name") {
  const OperatorBundle ops = build_operators(Complex(gen::cycle(3)));
  for (const auto& name : operator_names()) CHECK_NOTHROW(operator_by_name(ops, name));
  CHECK(&operator_by_name(ops, "Linv") == &ops.green);
  CHECK(&operator_by_name(ops, "H0abs") == &ops.kirchhoff_signless);
  CHECK_THROWS(operator_by_name(ops, "X"));
}

TEST_CASE("signless Kirchhoff of a complete graph is (n-2)I + J") {
  for (int n = 2; n <= 7; ++n) {
    const OperatorBundle ops = build_operators(Complex(gen::complete(n)));
    IntMatrix expected(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) expected(i, j) = i == j ? n - 1 : 1;
    CHECK(ops.kirchhoff_signless == expected);
    const IntPolynomial p = charpoly(ops.kirchhoff_signless);
    CHECK(p(Rational(2 * n - 2)) == 0);
    CHECK(p(Rational(n - 2)) == 0);
    if (n > 2) CHECK(p(Rational(0)) != 0);
  }
}
