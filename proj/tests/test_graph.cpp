#include <catch2/catch_amalgamated.hpp>

#include "cliqueline/circulant.hpp"
#include "cliqueline/errors.hpp"
#include "cliqueline/graph.hpp"
#include "oracles.hpp"

using namespace cliqueline;

TEST_CASE("complete graphs") {
  CHECK(complete(1).vertex_count() == 1);
  CHECK(complete(1).edge_count() == 0);
  CHECK(complete(4).edge_count() == 6);
  const Graph k5 = complete(5);
  for (VertexId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
  CHECK_THROWS_AS(complete(0), InvalidArgument);
}

TEST_CASE("cycles and paths") {
  const Graph c5 = cycle(5);
  CHECK(c5.vertex_count() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(path(1).vertex_count() == 2);
  CHECK(path(1).edge_count() == 1);
  CHECK(path(3).edge_count() == 3);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
  CHECK_THROWS_AS(path(0), InvalidArgument);
}

TEST_CASE("graph construction normalizes edges") {
  std::vector<std::pair<VertexId, VertexId>> edges{{1, 0}, {0, 1}, {2, 2}, {2, 1}};
  Graph g(3, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == EdgeId(0, 1));
  CHECK(g.edges()[1] == EdgeId(1, 2));
  std::vector<std::pair<VertexId, VertexId>> bad{{0, 3}};
  CHECK_THROWS_AS(Graph(3, bad), InvalidArgument);
}

TEST_CASE("complete multipartite edge counts") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n) CHECK(complete_multipartite({m, n}).edge_count() == m * n);
  std::vector<std::size_t> parts{2, 3, 1, 4};
  std::size_t sum = 10, squares = 4 + 9 + 1 + 16;
  CHECK(complete_multipartite(parts).edge_count() == (sum * sum - squares) / 2);
  CHECK(complete_multipartite({1, 1, 1, 1}) == complete(4));
  CHECK_THROWS_AS(complete_multipartite(std::span<const std::size_t>()), InvalidArgument);
}

TEST_CASE("octahedron is the suspension of the 4-cycle") {
  const Graph oct = complete_multipartite({2, 2, 2});
  CHECK(oct.edge_count() == 12);
  CHECK(oracle::isomorphic(oct, suspension(cycle(4))));
  CHECK(isomorphic_small(oct, suspension(cycle(4))));
}

TEST_CASE("cone, suspension and wheel apexes") {
  const Graph s = suspension(cycle(4));
  CHECK(s.vertex_count() == 6);
  CHECK(s.edge_count() == 12);
  CHECK(s.labels().at(4) == "a");
  CHECK(s.labels().at(5) == "b");
  CHECK_FALSE(s.adjacent(4, 5));
  const Graph c = cone(path(2));
  CHECK(c.labels().at(3) == "w");
  CHECK(c.degree(3) == 3);
  CHECK(wheel(5) == cone(cycle(5)));
}

TEST_CASE("line graph from the definition") {
  const Graph p2 = path(2);
  const auto lg = line_graph(p2);
  CHECK(lg.graph.vertex_count() == 2);
  CHECK(lg.graph.edge_count() == 1);

  for (const Graph& g : {complete(5), petersen(), bowtie(), complete_multipartite({2, 3}), prism()}) {
    const auto l = line_graph(g);
    REQUIRE(l.edge_of_vertex == g.edges());
    const auto& e = g.edges();
    for (VertexId i = 0; i < e.size(); ++i) {
      for (VertexId j = i + 1; j < e.size(); ++j) {
        const bool share = e[i].contains(e[j].lo) || e[i].contains(e[j].hi);
        CHECK(l.graph.adjacent(i, j) == share);
      }
    }
  }
}

TEST_CASE("gluing graphs") {
  const Graph two = disjoint_union(cycle(3), cycle(3));
  CHECK(two.vertex_count() == 6);
  CHECK(component_count(two) == 2);

  const Graph bt = wedge_at_vertex(cycle(3), cycle(3), 0, 0);
  CHECK(bt.vertex_count() == 5);
  CHECK(bt.edge_count() == 6);
  CHECK(oracle::isomorphic(bt, bowtie()));

  const Graph k4k4 = glue(complete(4), complete(4), {{0, 0}, {1, 1}, {2, 2}});
  CHECK(k4k4.vertex_count() == 5);
  CHECK(k4k4.edge_count() == 9);

  CHECK_THROWS_AS(glue(complete(3), complete(3), {{0, 0}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(glue(path(2), complete(3), {{0, 0}, {2, 1}}), InvalidArgument);
}

TEST_CASE("triangles agree with brute force") {
  CHECK(triangles(complete(4)).size() == 4);
  CHECK(triangles(complete_multipartite({2, 2})).empty());
  CHECK(triangles(complete_multipartite({2, 2, 2})).size() == 8);
  for (const Graph& g : {complete(6), petersen(), bowtie(), wheel(6), prism(4), complete_multipartite({1, 2, 3})}) {
    CHECK(triangles(g) == oracle::triangles(g));
    CHECK(is_triangle_free(g) == oracle::triangles(g).empty());
  }
}

TEST_CASE("chordality against induced-cycle search on all graphs with 6 vertices") {
  CHECK_FALSE(is_chordal(cycle(4)));
  CHECK(is_chordal(complete(5)));
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n)) mismatches += is_chordal(g) != oracle::chordal(g);
  CHECK(mismatches == 0);
}

TEST_CASE("maximum cardinality search visits every vertex once") {
  const Graph g = petersen();
  auto order = maximum_cardinality_search(g);
  std::sort(order.begin(), order.end());
  std::vector<VertexId> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK(order == all);
  CHECK(maximum_cardinality_search(complete(3)).front() == 0);
}

TEST_CASE("wheel-freeness against explicit wheel search on all graphs with 6 vertices") {
  CHECK_FALSE(is_wheel_free(complete(4)));
  CHECK(is_wheel_free(petersen()));
  CHECK_FALSE(is_wheel_free(wheel(5)));
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& g : oracle::all_graphs(n)) mismatches += is_wheel_free(g) == oracle::contains_wheel(g);
  CHECK(mismatches == 0);
}

TEST_CASE("bipartite detection") {
  CHECK(is_bipartite(complete_multipartite({3, 3})));
  CHECK(is_bipartite(cycle(6)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_bipartite(Graph(3)));
}

TEST_CASE("components and cyclomatic number") {
  CHECK(cyclomatic(petersen()) == 6);
  CHECK(cyclomatic(path(5)) == 0);
  CHECK(cyclomatic(disjoint_union(cycle(4), cycle(5))) == 2);
  CHECK(cyclomatic(complete_multipartite({3, 3})) == 4);
  const Graph g = disjoint_union(disjoint_union(path(1), Graph(1)), cycle(3));
  CHECK(component_count(g) == 3);
  CHECK(component_labels(g) == std::vector<std::size_t>{0, 0, 1, 2, 2, 2});
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("small isomorphism test agrees with permutation search") {
  const auto graphs = oracle::all_graphs(5);
  // A deterministic sample of pairs with equal edge counts.
  std::size_t checked = 0;
  for (std::size_t i = 0; i < graphs.size(); i += 37) {
    for (std::size_t j = i; j < graphs.size(); j += 23) {
      if (graphs[i].edge_count() != graphs[j].edge_count()) continue;
      CHECK(isomorphic_small(graphs[i], graphs[j]) == oracle::isomorphic(graphs[i], graphs[j]));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("induced subgraphs relabel densely") {
  const Graph g = petersen();
  std::vector<VertexId> outer{0, 1, 2, 3, 4};
  CHECK(g.induced(outer) == cycle(5));
}
