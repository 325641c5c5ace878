// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "connlap/generators.hpp"
#include "connlap/graph.hpp"
#include "connlap/graph_io.hpp"
#include "corpus.hpp"

using namespace connlap;

TEST_CASE("graph construction normalizes and validates edges") {
  const Graph g(3, {{2, 0}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
  CHECK(g == Graph(3, {{0, 1}, {2, 0}}));
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("family sizes") {
  CHECK(gen::path(5).edge_count() == 4);
  CHECK(gen::cycle(7).edge_count() == 7);
  CHECK(gen::star(4).vertex_count() == 5);
  CHECK(gen::wheel(4).edge_count() == 8);
  CHECK(gen::complete(6).edge_count() == 15);
  CHECK(gen::complete_bipartite(3, 4).edge_count() == 12);
  CHECK(gen::grid(6, 2).edge_count() == 16);
  CHECK(gen::petersen(5, 2).edge_count() == 15);
  CHECK(gen::petersen(6, 3).edge_count() == 15);  // inner perfect matching
  CHECK(gen::petersen(6, 6).edge_count() == 12);  // no inner edges
  const Graph f = gen::figure_eight();
  CHECK(f.vertex_count() == 7);
  CHECK(f.edge_count() == 8);
  CHECK(f.max_degree() == 4);
}

TEST_CASE("structural predicates") {
  CHECK(gen::cycle(6).is_bipartite());
  CHECK_FALSE(gen::cycle(5).is_bipartite());
  CHECK(gen::cycle(5).is_regular());
  CHECK_FALSE(gen::star(3).is_regular());
  CHECK(gen::grid(3, 4).diameter() == 5);
  CHECK(disjoint_union(gen::path(2), gen::path(3)).diameter() == -1);
  CHECK(disjoint_union(gen::path(2), gen::path(3)).component_count() == 2);
  const auto comps = disjoint_union(gen::cycle(3), gen::path(2)).components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == gen::cycle(3));
  CHECK(comps[1] == gen::path(2));
}

TEST_CASE("barycentric refinement follows the f-vector map and is bipartite") {
  for (const auto& g : testing::deterministic_corpus()) {
    const Graph b = barycentric_refine(g);
    CHECK(f_vector(b) == stirling_map(f_vector(g)));
    CHECK(b.is_bipartite());
  }
}

TEST_CASE("line graph of a cycle is the cycle; of a star is complete") {
  CHECK(line_graph(gen::cycle(6)).edge_count() == 6);
  CHECK(line_graph(gen::cycle(6)).is_regular());
  CHECK(line_graph(gen::star(5)) == gen::complete(5));
}

TEST_CASE("relabeling preserves the edge count and degree multiset") {
  const Graph g = gen::gnm(10, 17, 4);
  const Graph h = relabel(g, {9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  CHECK(dg == dh);
  CHECK(h.has_edge(9 - g.edges()[0].first, 9 - g.edges()[0].second));
}

TEST_CASE("random generators are reproducible per seed") {
  CHECK(gen::gnm(15, 30, 7) == gen::gnm(15, 30, 7));
  CHECK_FALSE(gen::gnm(15, 30, 7) == gen::gnm(15, 30, 8));
  CHECK(gen::gnp(20, 0.3, 2) == gen::gnp(20, 0.3, 2));
  CHECK(gen::gnp(20, 0.0, 2).edge_count() == 0);
  CHECK(gen::gnp(20, 1.0, 2).edge_count() == 190);
}

TEST_CASE("generator specs") {
  CHECK(generate("cycle:8") == gen::cycle(8));
  CHECK(generate("petersen:6,2") == gen::petersen(6, 2));
  CHECK(generate("gnm:20,50:seed=7") == gen::gnm(20, 50, 7));
  CHECK(generate("gnm:20,50", 7) == gen::gnm(20, 50, 7));
  CHECK(generate("bary:star:4") == barycentric_refine(gen::star(4)));
  CHECK(generate("line:path:4") == line_graph(gen::path(4)));
  CHECK_THROWS(generate("gnm:20,50"));
  CHECK_THROWS(generate("cycle"));
  CHECK_THROWS(generate("cycle:2"));
  CHECK_THROWS(generate("nosuch:3"));
  CHECK(expand_spec("cycle:8..12..2") == std::vector<std::string>{"cycle:8", "cycle:10", "cycle:12"});
  CHECK(expand_spec("complete_bipartite:3,3..5").size() == 3);
  CHECK(expand_spec("figure8") == std::vector<std::string>{"figure8"});
}

TEST_CASE("edge-list round trip") {
  for (const auto& g : testing::deterministic_corpus()) {
    std::stringstream s;
    write_graph(s, g);
    const ParsedGraph p = read_graph(s);
    CHECK(p.graph.vertex_count() == g.vertex_count());
    CHECK(p.graph.name() == g.name());
    std::vector<Edge> mapped;
    for (auto [a, b] : p.graph.edges()) {
      const auto x = static_cast<Vertex>(p.original_labels[a]), y = static_cast<Vertex>(p.original_labels[b]);
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == g.edges());
  }
}

TEST_CASE("edge-list parsing") {
  std::istringstream in("# name: tri\n10 20\n\n20 30\n# note\n30 10\n7\n");
  const ParsedGraph p = read_graph(in);
  CHECK(p.graph.name() == "tri");
  CHECK(p.graph.vertex_count() == 4);
  CHECK(p.graph.edge_count() == 3);
  CHECK(p.original_labels == std::vector<long long>{10, 20, 30, 7});
  std::istringstream bad("1 2 3\n");
  CHECK_THROWS(read_graph(bad));
  std::istringstream loop("1 1\n");
  CHECK_THROWS(read_graph(loop));
}

TEST_CASE("corpus size") {
  CHECK(testing::full_corpus().size() >= 200);
  CHECK(testing::random_corpus().size() == 100);
  for (const auto& g : testing::random_corpus()) CHECK(g.vertex_count() <= 20);
}
