#include <algorithm>
#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"
#include "splitlike/classes.hpp"
#include "splitlike/generators.hpp"
#include "splitlike/graph.hpp"

using namespace splitlike;

TEST_CASE("build merges duplicate edges and rejects bad endpoints") {
  auto p3 = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK(p3.size() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));

  auto single = Graph::build(1, {});
  CHECK(is_connected(single));

  CHECK(Graph::build(4, {{0, 1}, {1, 0}, {0, 1}, {2, 3}}).edge_count() == 2);
  CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::build(3, {{-1, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency is sorted and symmetric") {
  auto g = gen_random_connected(30, 0.2, 99);
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    auto nb = g.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    for (Vertex u : nb) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("vertex set operations") {
  VertexSet a{3, 1, 2, 1};
  CHECK(a.ids() == std::vector<Vertex>{1, 2, 3});
  VertexSet b{2, 5};
  CHECK(a.united(b) == VertexSet{1, 2, 3, 5});
  CHECK(a.minus(b) == VertexSet{1, 3});
  CHECK(a.intersects(b));
  CHECK(VertexSet{1, 3}.subset_of(a));
  CHECK_FALSE(b.subset_of(a));
  a.insert(0);
  CHECK(a.front() == 0);
}

TEST_CASE("induced connectivity") {
  auto p3 = oracle::path(3);
  CHECK_FALSE(is_connected_on(p3, {0, 2}));
  CHECK(is_connected_on(p3, {0, 1, 2}));
  CHECK(is_connected_on(oracle::cycle(6), {0, 1, 2}));
  CHECK_THROWS_AS(is_connected_on(p3, {}), std::invalid_argument);
}

TEST_CASE("diameter of small graphs") {
  CHECK(diameter(oracle::cycle(6)) == 3);
  CHECK(diameter(oracle::complete(4)) == 1);
  CHECK(diameter(oracle::star(4)) == 2);
  CHECK(diameter(Graph::build(1, {})) == 0);
  CHECK_FALSE(diameter(Graph::build(4, {{0, 1}, {2, 3}})).has_value());
  auto ecc = eccentricities(oracle::path(5));
  REQUIRE(ecc);
  CHECK(*ecc == std::vector<int>{4, 3, 2, 3, 4});
}

TEST_CASE("diameter agrees with Floyd-Warshall on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 49;
    auto g = gen_random_connected(n, 0.02 + static_cast<double>(seed % 7) * 0.05, seed);
    CHECK(diameter(g) == oracle::diameter_floyd(g));
  }
  auto disconnected = Graph::build(5, {{0, 1}, {2, 3}});
  CHECK(diameter(disconnected) == oracle::diameter_floyd(disconnected));
}

TEST_CASE("induced subgraph keeps a back map") {
  auto k3 = induced_subgraph(oracle::complete(4), {0, 2, 3});
  CHECK(k3.graph == oracle::complete(3));
  CHECK(k3.to_parent == std::vector<Vertex>{0, 2, 3});

  auto p3 = induced_subgraph(oracle::cycle(6), {0, 1, 2});
  CHECK(p3.graph == oracle::path(3));

  auto g = gen_random_connected(12, 0.3, 4);
  std::vector<Vertex> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  auto same = induced_subgraph(g, VertexSet(all));
  CHECK(same.graph == g);
  CHECK(same.to_parent == all);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 40}), std::out_of_range);
}

TEST_CASE("split-like generator shapes") {
  SplitLikeParams k2;
  k2.part_sizes = {1, 1};
  auto [edge, p1] = gen_random_split_like(k2, 3);
  CHECK(edge == Graph::build(2, {{0, 1}}));

  SplitLikeParams c4;
  c4.part_sizes = {2, 2};
  auto [biclique, p2] = gen_random_split_like(c4, 3);
  CHECK(biclique.edge_count() == 4);
  CHECK(oracle::partition_ok(biclique, p2));

  SplitLikeParams tri;
  tri.part_sizes = {2, 2, 2};
  tri.independent_size = 4;
  tri.attach_prob = 0.5;
  auto [g, p] = gen_random_split_like(tri, 7);
  CHECK(is_connected(g));
  CHECK(verify_partition(g, p));
  CHECK(oracle::partition_ok(g, p));

  SplitLikeParams zero;
  zero.part_sizes = {0, 0};
  CHECK_THROWS(gen_random_split_like(zero, 1));
}

TEST_CASE("split-like generator is connected, valid and seeded") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitLikeParams params;
    const std::size_t k = 1 + seed % 3;
    params.part_sizes.assign(k, 1 + seed % 4);
    params.independent_size = seed % 9;
    params.attach_prob = static_cast<double>(seed % 5) / 5.0;
    if (k == 1 && seed % 2 == 0) params.kind = PartitionKind::Clique;
    // A bipartite shape without independent vertices is disconnected.
    if (k == 1 && params.kind != PartitionKind::Clique && params.part_sizes[0] > 1) {
      params.independent_size = std::max<std::size_t>(params.independent_size, 1);
    }
    auto [g, p] = gen_random_split_like(params, seed);
    CHECK(is_connected(g));
    CHECK(oracle::partition_ok(g, p));
    auto again = gen_random_split_like(params, seed);
    CHECK(again.first == g);
    CHECK(again.second == p);
  }
}

TEST_CASE("family generators") {
  CHECK(gen_path(4) == oracle::path(4));
  CHECK(gen_cycle(5) == oracle::cycle(5));
  CHECK(gen_complete(5) == oracle::complete(5));
  CHECK(gen_star(3) == oracle::star(3));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto [g, p] = gen_chordal_trisplit(1 + seed % 5, seed % 7, seed);
    CHECK(oracle::partition_ok(g, p));
    CHECK(oracle::chordal_by_elimination(g));
    CHECK(is_connected(g));
  }
  auto pool = VertexSet{2, 4, 6, 8, 10};
  auto s = random_subset(pool, 2, 3, 11);
  CHECK(s.subset_of(pool));
  CHECK(s.size() >= 2);
  CHECK(s.size() <= 3);
  CHECK(random_subset(pool, 2, 3, 11) == s);
}
