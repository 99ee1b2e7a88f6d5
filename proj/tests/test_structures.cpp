#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperwalk/errors.hpp"
#include "hyperwalk/random.hpp"
#include "hyperwalk/structures.hpp"

using namespace hyperwalk;

TEST_CASE("graph construction enforces its invariants") {
  Graph g(3, {{0, 1}, {2, 1}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges()[1] == std::array<int, 2>{1, 2});  // canonical order
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});

  CHECK_THROWS_AS(Graph(2, {{0, 0}}), spec_error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), spec_error);  // duplicate
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), spec_error);
  CHECK_THROWS_AS(Graph(2, {}, false, {"a"}), spec_error);
}

TEST_CASE("directed graphs symmetrize adjacency") {
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}}, true);
  CHECK(g.edges().size() == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.adjacent(2, 1));
}

TEST_CASE("hypergraph invariants") {
  Hypergraph h(4, {{2, 1, 0}, {0, 1}, {2, 3}});
  CHECK(h.edge(0) == std::vector<int>{0, 1, 2});  // undirected edges sort
  CHECK(h.degree(0) == 2);
  CHECK(h.degree(3) == 1);
  CHECK(h.incident_edges(2) == std::vector<int>{0, 2});
  CHECK_FALSE(h.k_regular(2));
  CHECK(Hypergraph(3, {{0, 1}, {1, 2}}).k_regular(2));

  CHECK_THROWS_AS(Hypergraph(3, {{}}), spec_error);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 0, 1}}), spec_error);
  CHECK_THROWS_AS(Hypergraph(3, {{0, 3}}), spec_error);
  // repeated vertices are rejected in ordered edges as well
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 0}}, true), spec_error);
}

TEST_CASE("duplicate hyperedges are distinct edges") {
  Hypergraph h(2, {{0, 1}, {0, 1}});
  CHECK(h.edge_count() == 2);
  CHECK(h.degree(0) == 2);
  CHECK(incidence_pairs(h).size() == 4);
}

TEST_CASE("incidence pairs are edge-major, vertex-ascending") {
  // a = {A,B,C}, b = {A,B}, c = {C,D}
  Hypergraph fig3(4, {{0, 1, 2}, {0, 1}, {2, 3}});
  const auto pairs = incidence_pairs(fig3);
  REQUIRE(pairs.size() == 7);
  const std::vector<std::array<int, 2>> expected = {
      {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 2}, {3, 2}};
  CHECK(pairs == expected);

  Hypergraph single(2, {{0, 1}});
  CHECK(incidence_pairs(single) ==
        std::vector<std::array<int, 2>>{{0, 0}, {1, 0}});

  Hypergraph regular3(5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(incidence_pairs(regular3).size() == 6);
}

TEST_CASE("incidence pair count equals the sum of edge sizes") {
  Rng rng(20240517);
  for (int trial = 0; trial < 50; ++trial) {
    Hypergraph h = random_hypergraph(rng, 8, 6);
    std::size_t total = 0;
    for (int e = 0; e < h.edge_count(); ++e) total += h.edge_size(e);
    CHECK(incidence_pairs(h).size() == total);
  }
}

TEST_CASE("2-regular hypergraphs convert to graphs and back") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 8, 10);
    Hypergraph h = Hypergraph::from_graph(g);
    CHECK(h.k_regular(2));
    Graph back = h.to_graph();
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  CHECK_THROWS_AS(Hypergraph(3, {{0, 1, 2}}).to_graph(), spec_error);
}

TEST_CASE("clique check") {
  Graph triangle = Graph::complete(3);
  Graph path = Graph::path(3);
  const std::vector<int> all = {0, 1, 2};
  const std::vector<int> single = {1};
  CHECK(clique_check(triangle, all));
  CHECK(clique_check(path, single));
  CHECK_FALSE(clique_check(path, all));  // 0 and 2 are not adjacent
  const std::vector<int> bad = {0, 5};
  CHECK_THROWS_AS(clique_check(path, bad), spec_error);
}

TEST_CASE("tessellation validation") {
  Graph path = Graph::path(3);

  SUBCASE("singletons are always valid") {
    Tessellation t{{{0}, {1}, {2}}, 3};
    CHECK(validate_tessellation(t, path).valid);
    CHECK(validate_tessellation(t, Graph(3, {})).valid);
  }
  SUBCASE("adjacent pair plus singleton is valid on a path") {
    Tessellation t{{{0, 1}, {2}}, 3};
    CHECK(validate_tessellation(t, path).valid);
  }
  SUBCASE("non-adjacent polygon is rejected and identified") {
    Tessellation t{{{0, 2}, {1}}, 3};
    const auto report = validate_tessellation(t, path);
    CHECK_FALSE(report.valid);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].polygon == 0);
  }
  SUBCASE("overlap violates disjointness") {
    Tessellation t{{{0, 1}, {1, 2}}, 3};
    const auto report = validate_tessellation(t, Graph::complete(3));
    CHECK_FALSE(report.valid);
    CHECK(report.issues[0].polygon == 1);
  }
  SUBCASE("uncovered vertices are reported") {
    Tessellation t{{{0, 1}}, 3};
    const auto report = validate_tessellation(t, path);
    CHECK_FALSE(report.valid);
    CHECK(report.issues[0].polygon == -1);
  }
  SUBCASE("out-of-range index is malformed") {
    Tessellation t{{{0, 7}, {1, 2}}, 3};
    CHECK_FALSE(validate_tessellation(t, path).valid);
  }
  SUBCASE("size mismatch throws") {
    Tessellation t{{{0}, {1}}, 2};
    CHECK_THROWS_AS(validate_tessellation(t, path), spec_error);
  }
}

TEST_CASE("clique-built tessellations always validate") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 9, 12);
    for (const auto& t : random_tessellations(rng, g, 3))
      CHECK(validate_tessellation(t, g).valid);
  }
}
