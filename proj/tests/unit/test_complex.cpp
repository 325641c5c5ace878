// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <stdexcept>

#include "connlap/complex.hpp"
#include "connlap/generators.hpp"
#include "corpus.hpp"

using namespace connlap;

TEST_CASE("simplices") {
  const Simplex v = Simplex::vertex(3), e = Simplex::edge(5, 3);
  CHECK(e[0] == 3);
  CHECK(e[1] == 5);
  CHECK(v.parity() == 1);
  CHECK(e.parity() == -1);
  CHECK(v.is_face_of(e));
  CHECK_FALSE(e.is_face_of(v));
  CHECK(v.intersects(e));
  CHECK_FALSE(Simplex::vertex(4).intersects(e));
  CHECK(Simplex::edge(1, 2).intersects(Simplex::edge(2, 7)));
  CHECK(v < e);
  CHECK(Simplex::vertex(9) < Simplex::edge(0, 1));
  CHECK_THROWS(Simplex::edge(2, 2));
}

TEST_CASE("complex ordering and lookup") {
  const Complex c(gen::path(3));
  REQUIRE(c.size() == 5);
  CHECK(c[0] == Simplex::vertex(0));
  CHECK(c[3] == Simplex::edge(0, 1));
  CHECK(c.index_of(Simplex::edge(1, 2)) == 4);
  CHECK(c.find(Simplex::edge(0, 2)) == -1);
  CHECK_THROWS_AS(c.index_of(Simplex::edge(0, 2)), std::out_of_range);
  CHECK(c.euler_characteristic() == 1);
  CHECK_THROWS(Complex(gen::empty(0)));
}

TEST_CASE("connection graph of an interval is a path through the edge") {
  const Graph g = connection_graph(Complex(gen::complete(2)));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
}

TEST_CASE("connection graph edge count") {
  // Vertex-edge incidences plus pairs of edges meeting at a vertex.
  for (const auto& g : testing::deterministic_corpus()) {
    long long expected = 2LL * g.edge_count();
    for (int d : g.degrees()) expected += static_cast<long long>(d) * (d - 1) / 2;
    CHECK(connection_graph(Complex(g)).edge_count() == expected);
  }
}

TEST_CASE("stars and unit spheres") {
  const Complex c(gen::star(3));
  const auto st = star_of(c, Simplex::vertex(0));
  CHECK(st.size() == 4);  // the vertex and its three edges
  CHECK(star_of(c, Simplex::edge(0, 1)).size() == 1);
  CHECK(sphere_chi(c, Simplex::vertex(0)) == 3);
  CHECK(sphere_chi(c, Simplex::vertex(1)) == 1);
  CHECK(sphere_chi(c, Simplex::edge(0, 2)) == 2);
  CHECK(euler_characteristic(c, st) == 1 - 3);
}
