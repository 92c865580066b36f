#include "doctest.h"

#include "msc/errors.hpp"
#include "msc/generators.hpp"
#include "msc/graph.hpp"
#include "oracles.hpp"

using namespace msc;

TEST_CASE("vertex set basics") {
  VertexSet s{0, 5, 64, 127};
  CHECK(s.size() == 4);
  CHECK(s.first() == 0);
  CHECK(s.last() == 127);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  CHECK(s.to_string() == "{0,5,64,127}");
  CHECK(s.to_vector() == std::vector<int>{0, 5, 64, 127});
  CHECK((s - VertexSet{5}) == VertexSet{0, 64, 127});
  CHECK(VertexSet{}.first() == -1);
  CHECK(VertexSet::prefix(70).size() == 70);
  CHECK(VertexSet::prefix(128).size() == 128);
  CHECK_THROWS_AS(VertexSet{128}, InvalidArgument);
  CHECK_THROWS_AS(VertexSet{-1}, InvalidArgument);
  CHECK(VertexSet{0, 2} < VertexSet{1});
  CHECK(VertexSet{0} < VertexSet{0, 1});
}

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(129), InvalidArgument);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("delete_vertices") {
  auto k2 = complete_graph(2);
  CHECK(delete_vertices(k2, {0}).graph == complete_graph(1));

  auto p = path_graph(5);
  CHECK(delete_vertices(p, {}).graph == p);

  auto d = delete_vertices(path_graph(3), {1});
  CHECK(d.graph == Graph(2));
  CHECK(d.to_original == std::vector<int>{0, 2});
  CHECK(d.from_original == std::vector<int>{0, -1, 1});
  CHECK(d.map_set({0, 1, 2}) == VertexSet{0, 1});
  CHECK(d.unmap_set({1}) == VertexSet{2});

  CHECK_THROWS_AS(delete_vertices(k2, {2}), InvalidArgument);
}

TEST_CASE("deleting in two steps equals deleting the union") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = rng.between(1, 10);
    Graph g = erdos_renyi(n, 0.4, rng);
    VertexSet a = random_subset(g.vertices(), rng);
    VertexSet b = random_subset(g.vertices(), rng);
    auto first = delete_vertices(g, a);
    auto second = delete_vertices(first.graph, first.map_set(b));
    CHECK(second.graph == delete_vertices(g, a | b).graph);
  }
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(path_graph(3), {1}) == VertexSet{0, 2});
  CHECK(neighborhood(path_graph(3), {}).empty());
  CHECK(neighborhood(complete_graph(3), {0, 1}) == VertexSet{0, 1, 2});
  CHECK_THROWS_AS(neighborhood(path_graph(3), {3}), InvalidArgument);
}

TEST_CASE("disjoint_union") {
  CHECK(disjoint_union(Graph(1), Graph(1)) == Graph(2));
  auto c = cycle_graph(5);
  CHECK(disjoint_union(c, Graph(0)) == c);
  CHECK(disjoint_union(complete_graph(2), complete_graph(2)) == Graph(4, {{0, 1}, {2, 3}}));
}

TEST_CASE("connected_components") {
  CHECK(connected_components(path_graph(3)) == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(connected_components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
  CHECK(connected_components(disjoint_union(complete_graph(2), Graph(1))) ==
        std::vector<VertexSet>{{0, 1}, {2}});
  CHECK(component_of(path_graph(4), 0, {0, 1, 3}) == VertexSet{0, 1});
}

TEST_CASE("distance") {
  CHECK(distance(path_graph(3), 0, 2) == Distance::finite(2));
  CHECK(distance(complete_graph(2), 0, 1) == Distance::finite(1));
  CHECK(distance(Graph(2), 0, 1) == Distance::infinite());
  CHECK(distance(Graph(2), 0, 1).to_string() == "inf");
  CHECK_THROWS_AS(distance(Graph(2), 0, 2), InvalidArgument);
}

TEST_CASE("distance agrees with Floyd-Warshall") {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    Graph g = erdos_renyi(rng.between(1, 12), 0.25, rng);
    auto d = oracle::distances(g);
    for (int u = 0; u < g.order(); ++u)
      for (int v = 0; v < g.order(); ++v) {
        auto got = distance(g, u, v);
        CHECK((got.is_finite() ? got.value() : -1) == d[u][v]);
      }
  }
}

TEST_CASE("split_by_sets") {
  auto g = disjoint_union(complete_graph(2), complete_graph(2));
  auto s = split_by_sets(g, {0}, {2});
  CHECK(s.part_ab.empty());
  CHECK(s.part_a == VertexSet{0, 1});
  CHECK(s.part_b == VertexSet{2, 3});

  auto p = split_by_sets(path_graph(3), {0}, {2});
  CHECK(p.part_ab == VertexSet{0, 1, 2});
  CHECK((p.part_a | p.part_b | p.part_star).empty());

  auto e = split_by_sets(cycle_graph(4), {}, {});
  CHECK(e.part_star == VertexSet::prefix(4));
}

TEST_CASE("families") {
  CHECK(path_graph(1) == complete_graph(1));
  CHECK(cycle_graph(3) == complete_graph(3));
  CHECK(complete_bipartite_graph(1, 4) == star_graph(4));
  CHECK_THROWS_AS(cycle_graph(2), InvalidArgument);
  CHECK_THROWS_AS(path_graph(-1), InvalidArgument);
  CHECK(grid_graph(2, 3).edge_count() == 7);
  CHECK(generate_family(parse_family("grid"), 2, 3) == grid_graph(2, 3));
  CHECK_THROWS_AS(parse_family("wheel"), InvalidArgument);
}

TEST_CASE("labeled enumeration") {
  auto count = [](int n) {
    int c = 0;
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph&) { return ++c, true; });
    return c;
  };
  CHECK(count(0) == 1);
  CHECK(count(2) == 2);
  CHECK(count(4) == 64);
  CHECK(labeled_graph_count(7) == (1u << 21));
  CHECK_THROWS_AS(enumerate_labeled_graphs(8, [](std::uint64_t, const Graph&) { return true; }),
                  InvalidArgument);
  // bit k follows the lexicographic pair order (0,1), (0,2), (0,3), (1,2), ...
  CHECK(labeled_graph(4, 0b1000) == Graph(4, {{1, 2}}));
}

TEST_CASE("random generators are reproducible") {
  Rng a(99), b(99);
  CHECK(erdos_renyi(20, 0.3, a) == erdos_renyi(20, 0.3, b));
  Rng c(3);
  for (int t = 0; t < 100; ++t) {
    Graph tree = random_tree(c.between(1, 12), c);
    CHECK(tree.edge_count() == tree.order() - 1);
    CHECK(connected_components(tree).size() == 1);
  }
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
}
