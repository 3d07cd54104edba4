#include "doctest.h"
#include "support.hpp"

#include "ado/error.hpp"
#include "ado/graph.hpp"

using namespace ado;

TEST_SUITE("graph") {

TEST_CASE("construction keeps adjacency sorted and symmetric") {
  const Graph g = ref::make(5, {{3, 1}, {0, 4}, {1, 0}, {2, 1}});
  CHECK(g.num_vertices() == 5);
  CHECK(g.num_edges() == 4);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 5; ++v) {
    const auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (const Vertex w : nb) CHECK(g.has_edge(w, v));
    degree_sum += nb.size();
  }
  CHECK(degree_sum == 2 * g.num_edges());
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {1, 3}});
}

TEST_CASE("invalid edges are rejected") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  for (const auto* edges : {&loop, &dup, &range}) {
    try {
      Graph::from_edges(3, *edges);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::input);
    }
  }
}

TEST_CASE("bfs_full small cases") {
  CHECK(bfs_full(ref::path(3), 0).dist == std::vector<Distance>{0, 1, 2});
  CHECK(bfs_full(ref::make(2, {}), 0).dist == std::vector<Distance>{0, kUnreachable});
  CHECK(bfs_full(ref::cycle(6), 0).dist[3] == 3);
  CHECK_THROWS_AS(bfs_full(ref::path(3), 3), Error);
}

TEST_CASE("unreachable compares above finite values") {
  CHECK(kUnreachable > Distance(1'000'000));
  CHECK_FALSE(is_finite(kUnreachable));
  CHECK(add_distances(kUnreachable, 1) == kUnreachable);
  CHECK(add_distances(2, 3) == 5);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(ref::star(4)) == 4);
  CHECK(max_degree(ref::cycle(8)) == 2);
  CHECK(max_degree(ref::make(3, {})) == 0);
}

TEST_CASE("all_pairs_exact small cases") {
  const auto p3 = all_pairs_exact(ref::path(3), 1);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) CHECK(p3.at(u, v) == (u > v ? u - v : v - u));
  const auto k3 = all_pairs_exact(ref::complete(3), 1);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) CHECK(k3.at(u, v) == (u == v ? 0u : 1u));
}

TEST_CASE("all_pairs_exact matches Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = ref::random_graph(50, 4, 60, seed, seed % 2 == 0);
    const auto fw = ref::floyd_warshall(g);
    const auto apsp = all_pairs_exact(g, 2);
    for (Vertex u = 0; u < 50; ++u) {
      for (Vertex v = 0; v < 50; ++v) {
        REQUIRE(apsp.at(u, v) == fw[u][v]);
        CHECK(apsp.at(u, v) == apsp.at(v, u));
      }
      CHECK(apsp.at(u, u) == 0);
    }
  }
}

TEST_CASE("bfs rows respect the edge triangle inequality") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = ref::random_graph(80, 5, 120, seed, false);
    for (Vertex s = 0; s < 80; s += 7) {
      const auto row = bfs_full(g, s);
      for (const auto& [a, b] : g.edges()) {
        if (is_finite(row.dist[a]) && is_finite(row.dist[b])) {
          CHECK((row.dist[a] > row.dist[b] ? row.dist[a] - row.dist[b] : row.dist[b] - row.dist[a]) <= 1);
        } else {
          CHECK(row.dist[a] == row.dist[b]);
        }
      }
    }
  }
}

TEST_CASE("bfs_order is layered, id-ascending within layers, and repeatable") {
  const Graph g = ref::random_graph(60, 4, 90, 11);
  const auto fw = ref::floyd_warshall(g);
  for (Vertex s = 0; s < 60; ++s) {
    const auto order = bfs_order(g, s);
    CHECK(order == bfs_order(g, s));
    REQUIRE(order.front() == s);
    std::vector<Vertex> rest(order.begin() + 1, order.end());
    CHECK(rest == ref::prefix_order(fw, s, 1e9));
  }
}

TEST_CASE("components and induced subgraphs") {
  const Graph g = ref::make(6, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(connected_components(g) == std::vector<std::size_t>{0, 0, 0, 1, 1, 2});
  CHECK(component_of(g, 4) == std::vector<Vertex>{3, 4});
  const std::vector<Vertex> keep{2, 0, 1, 4};
  const auto sub = induced_subgraph(g, keep);
  CHECK(sub.to_parent == std::vector<Vertex>{0, 1, 2, 4});
  CHECK(sub.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("all_pairs capacity guard") {
  const Graph big = ref::make(20000, {});
  try {
    all_pairs_exact(big, 1);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capacity);
  }
}

}
