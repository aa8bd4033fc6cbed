#include <algorithm>
#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"
#include "splitlike/catalog.hpp"
#include "splitlike/classes.hpp"
#include "splitlike/errors.hpp"
#include "splitlike/generators.hpp"

using namespace splitlike;

namespace {

SplitLikePartition parts(std::vector<VertexSet> ps, VertexSet ind = {}) {
  SplitLikePartition p;
  p.parts = std::move(ps);
  p.independent = std::move(ind);
  return p;
}

// a=0, b=1, c1=2, c2=3, then independent vertices with the given neighbourhoods.
std::pair<Graph, SplitLikePartition> triclique_11m(std::size_t m, const std::vector<std::vector<Vertex>>& attach) {
  std::vector<Edge> e{{0, 1}};
  for (std::size_t i = 0; i < m; ++i) {
    e.emplace_back(0, static_cast<Vertex>(2 + i));
    e.emplace_back(1, static_cast<Vertex>(2 + i));
  }
  std::vector<Vertex> big, ind;
  for (std::size_t i = 0; i < m; ++i) big.push_back(static_cast<Vertex>(2 + i));
  for (std::size_t j = 0; j < attach.size(); ++j) {
    const auto u = static_cast<Vertex>(2 + m + j);
    ind.push_back(u);
    for (Vertex x : attach[j]) e.emplace_back(x, u);
  }
  return {Graph::build(2 + m + attach.size(), e), parts({{0}, {1}, VertexSet(big)}, VertexSet(ind))};
}

}  // namespace

TEST_CASE("verify_partition examples") {
  CHECK(verify_partition(oracle::cycle(4), parts({{0, 2}, {1, 3}})));
  SplitLikePartition k3;
  k3.kind = PartitionKind::Clique;
  k3.parts = {{0, 1, 2}};
  CHECK(verify_partition(oracle::complete(3), k3));
  CHECK_FALSE(verify_partition(oracle::path(3), parts({{0}, {2}}, {1})));
  CHECK_THROWS_AS(verify_partition(oracle::path(3), parts({{0}, {5}}, {1})), std::out_of_range);
}

TEST_CASE("verify_partition matches the definition on random certificates") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = gen_random_connected(7, 0.45, seed);
    // Random labelling: 0 independent, 1..2 parts.
    std::vector<std::vector<Vertex>> ps(2);
    std::vector<Vertex> ind;
    std::uint64_t bits = seed * 2654435761u;
    for (Vertex v = 0; v < 7; ++v, bits /= 3) {
      if (bits % 3 == 0) ind.push_back(v);
      else ps[bits % 3 - 1].push_back(v);
    }
    auto p = parts({VertexSet(ps[0]), VertexSet(ps[1])}, VertexSet(ind));
    CHECK(verify_partition(g, p) == oracle::partition_ok(g, p));
  }
}

TEST_CASE("brute-force certificate search") {
  auto c4 = find_partition_bruteforce(oracle::cycle(4), 2);
  REQUIRE(c4);
  CHECK(c4->parts[0] == VertexSet{0, 2});
  CHECK(c4->parts[1] == VertexSet{1, 3});
  CHECK(c4->independent.empty());

  auto claw = find_partition_bruteforce(oracle::star(3), 2);
  REQUIRE(claw);
  CHECK(oracle::partition_ok(oracle::star(3), *claw));

  CHECK_FALSE(find_partition_bruteforce(oracle::cycle(5), 2));
  CHECK_THROWS_AS(find_partition_bruteforce(oracle::path(25), 2), CapExceeded);

  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      for (std::size_t k = 1; k <= 3; ++k) {
        auto found = find_partition_bruteforce(g, k);
        CHECK(found.has_value() == oracle::has_partition(g, k));
        if (found) CHECK(oracle::partition_ok(g, *found));
      }
    }
  }
}

TEST_CASE("split and bipartite recognition") {
  auto k3 = recognize_split(oracle::complete(3));
  REQUIRE(k3);
  CHECK(k3->first == VertexSet{0, 1, 2});
  CHECK(k3->second.empty());
  CHECK_FALSE(recognize_split(oracle::cycle(4)));
  auto paw = recognize_split(Graph::build(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}));
  REQUIRE(paw);
  CHECK(paw->first == VertexSet{0, 1, 2});

  auto c6 = recognize_bipartite(oracle::cycle(6));
  REQUIRE(c6);
  CHECK(c6->first.size() == 3);
  CHECK(c6->second.size() == 3);
  CHECK_FALSE(recognize_bipartite(oracle::cycle(5)));
  auto p3 = recognize_bipartite(oracle::path(3));
  REQUIRE(p3);
  CHECK(p3->first == VertexSet{0, 2});
  CHECK(p3->second == VertexSet{1});

  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) {
      CHECK(recognize_split(g).has_value() == oracle::split_by_subsets(g));
      CHECK(recognize_bipartite(g).has_value() == oracle::bipartite_by_colouring(g));
    }
  }
}

TEST_CASE("induced stars") {
  CHECK(max_induced_star(oracle::star(4)) == 4);
  CHECK(max_induced_star(oracle::complete(4)) == 1);
  CHECK(max_induced_star(oracle::cycle(6)) == 2);
  CHECK_FALSE(is_k1r_free(oracle::star(3), 3));
  CHECK(is_k1r_free(oracle::complete(4), 2));
  CHECK_THROWS_AS(max_induced_star(oracle::star(30)), CapExceeded);
  CHECK(max_induced_star(oracle::star(30), StarOptions{40}) == 30);
}

TEST_CASE("induced stars agree with subset enumeration up to 5") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 3 + seed % 10;
    auto g = gen_random_connected(n, 0.1 + static_cast<double>(seed % 6) * 0.1, seed);
    CHECK(std::min(max_induced_star(g), 5) == oracle::star_up_to(g, 5));
  }
}

TEST_CASE("chordality") {
  CHECK_FALSE(is_chordal(oracle::cycle(4)).chordal);
  CHECK(is_chordal(oracle::path(6)).chordal);
  CHECK(is_chordal(oracle::star(5)).chordal);
  CHECK(is_chordal(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).chordal);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : connected_graphs(n)) {
      auto r = is_chordal(g);
      CHECK(r.chordal == oracle::chordal_by_elimination(g));
      if (r.chordal) CHECK(r.elimination_order.size() == g.size());
    }
  }
}

TEST_CASE("claw-free bipartite shapes") {
  CHECK(classify_claw_free_bipartite(oracle::path(5)) == ClawFreeBipartiteShape::Path);
  CHECK(classify_claw_free_bipartite(oracle::cycle(6)) == ClawFreeBipartiteShape::EvenCycle);
  CHECK(classify_claw_free_bipartite(oracle::star(3)) == ClawFreeBipartiteShape::NotInClass);
  CHECK(classify_claw_free_bipartite(oracle::cycle(5)) == ClawFreeBipartiteShape::NotInClass);
  CHECK_THROWS_AS(classify_claw_free_bipartite(Graph::build(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("claw-free bipartite shape matches the definition on the catalog") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const bool in = classify_claw_free_bipartite(g) != ClawFreeBipartiteShape::NotInClass;
      CHECK(in == (oracle::bipartite_by_colouring(g) && oracle::star_up_to(g, 3) < 3));
    }
  }
}

TEST_CASE("chordal trisplit characterisation examples") {
  auto [g1, p1] = triclique_11m(2, {{0, 2}});
  CHECK(chordal_trisplit_check(g1, p1));

  // Parts {a1,a2},{b1,b2},{c}: contains C4.
  std::vector<Edge> e;
  for (Vertex x : {0, 1}) {
    for (Vertex y : {2, 3}) e.emplace_back(x, y);
  }
  for (Vertex x : {0, 1, 2, 3}) e.emplace_back(x, 4);
  auto g2 = Graph::build(5, e);
  auto p2 = parts({{0, 1}, {2, 3}, {4}});
  CHECK_FALSE(chordal_trisplit_check(g2, p2));
  CHECK_FALSE(is_chordal(g2).chordal);

  auto [g3, p3] = triclique_11m(2, {{2, 3}});
  CHECK_FALSE(chordal_trisplit_check(g3, p3));
  CHECK_FALSE(is_chordal(g3).chordal);

  CHECK_THROWS_AS(chordal_trisplit_check(oracle::cycle(4), parts({{0, 2}, {1, 3}})), PreconditionError);
}

TEST_CASE("chordal trisplit check implies chordal") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitLikeParams params;
    params.part_sizes = {1 + seed % 2, 1 + seed / 2 % 2, 1 + seed % 4};
    params.independent_size = seed % 8;
    params.attach_prob = 0.25;
    auto [g, p] = gen_random_split_like(params, seed);
    if (chordal_trisplit_check(g, p)) CHECK(oracle::chordal_by_elimination(g));
  }
}

TEST_CASE("chordal trisplit check misses chordal graphs with a full-hub vertex") {
  // u sees a, b, c1, c2; w hangs on c1. Chordal, yet u has two neighbours in one part.
  auto [g, p] = triclique_11m(2, {{0, 1, 2, 3}, {2}});
  CHECK(oracle::chordal_by_elimination(g));
  CHECK_FALSE(chordal_trisplit_check(g, p));
}

TEST_CASE("star centres") {
  auto claw = oracle::star(3);
  CHECK(star_center_bipartite(claw, {0}, {1, 2, 3}) == Vertex{0});
  auto c6 = oracle::cycle(6);
  CHECK_FALSE(star_center_bipartite(c6, {0, 2, 4}, {1, 3, 5}));
  CHECK_FALSE(star_center_bipartite(c6, {1, 3, 5}, {0, 2, 4}));

  auto k22 = oracle::cycle(4);
  CHECK(star_center_bisplit(k22, parts({{0, 2}, {1, 3}})) == Vertex{0});

  // Parts {0},{1}; 2 pendant on 0, 3 pendant on 1.
  auto pend = Graph::build(4, {{0, 1}, {0, 2}, {1, 3}});
  CHECK(star_center_bisplit(pend, parts({{0}, {1}}, {2, 3})) == Vertex{0});
}

TEST_CASE("star centres against exhaustive candidate checks") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitLikeParams params;
    params.part_sizes = {1 + seed % 3, 1 + seed / 3 % 3};
    params.independent_size = seed % 6;
    params.attach_prob = 0.5;
    auto [g, p] = gen_random_split_like(params, seed);
    std::optional<Vertex> want;
    for (Vertex x : p.k_side()) {
      bool ok = true;
      for (Vertex y : p.independent) ok = ok && (g.degree(y) == 1 || g.has_edge(x, y));
      if (ok) {
        want = x;
        break;
      }
    }
    CHECK(star_center_bisplit(g, p) == want);
  }
}

TEST_CASE("bisplit diameter-3 condition") {
  // Biclique {0,1}x{2,3}; 4 sees only 0, 5 sees only 1.
  auto g = Graph::build(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 5}});
  auto p = parts({{0, 1}, {2, 3}}, {4, 5});
  CHECK_FALSE(bisplit_diam3_condition(g, p));
  CHECK(oracle::diameter_floyd(g) == 4);

  auto small = Graph::build(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}});
  CHECK(bisplit_diam3_condition(small, parts({{0, 1}, {2, 3}}, {4})));
}

TEST_CASE("class report") {
  auto r = classify(oracle::path(4));
  CHECK(r.connected);
  CHECK(r.diameter == 3);
  CHECK(r.bipartite.has_value());
  CHECK(r.chordal);
  CHECK(r.claw_shape == ClawFreeBipartiteShape::Path);
  CHECK(r.max_induced_star == 2);
  CHECK(r.vertices == 4);
  CHECK(r.edges == 3);
  if (r.bisplit) CHECK(oracle::partition_ok(oracle::path(4), *r.bisplit));
}
