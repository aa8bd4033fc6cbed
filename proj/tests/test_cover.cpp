#include <algorithm>
#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "support/oracles.hpp"
#include "splitlike/cover.hpp"
#include "splitlike/errors.hpp"

using namespace splitlike;

TEST_CASE("cover validation") {
  CHECK(validate(ExactCoverInstance{3, 3, {{0, 1, 2}}, 3}));
  CHECK(validate(ExactCoverInstance{4, 3, {{0, 1, 2}}, {}}).issue == CoverIssue::GroundNotDivisible);
  ExactCoverInstance capped{6, 3, {{0, 1, 2}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}}, 3};
  CHECK(validate(capped).issue == CoverIssue::OccurrenceCapExceeded);
  CHECK(validate(ExactCoverInstance{3, 3, {{0, 1, 3}}, {}}).issue == CoverIssue::ElementOutOfRange);
  CHECK(validate(ExactCoverInstance{3, 3, {{0, 1, 1}}, {}}).issue == CoverIssue::RepeatedElement);
  CHECK(validate(ExactCoverInstance{3, 3, {{0, 1}}, {}}).issue == CoverIssue::WrongSetSize);
  CHECK(validate(ExactCoverInstance{2, 2, {{0, 1}}, {}}).issue == CoverIssue::SetSizeTooSmall);
}

TEST_CASE("exact cover examples") {
  ExactCoverInstance one{3, 3, {{0, 1, 2}}, {}};
  CHECK(solve_exact_cover(one) == std::vector<std::size_t>{0});

  ExactCoverInstance yes{6, 3, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}}, {}};
  CHECK(solve_exact_cover(yes) == std::vector<std::size_t>{0, 2});

  ExactCoverInstance no{6, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, {}};
  CHECK_FALSE(solve_exact_cover(no));
  CHECK_FALSE(oracle::exact_cover_exists(no));

  ExactCoverInstance big{3, 3, std::vector<std::vector<int>>(30, {0, 1, 2}), {}};
  CHECK_THROWS_AS(solve_exact_cover(big), CapExceeded);
}

TEST_CASE("exact cover agrees with subset enumeration") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CoverSourceParams params;
    params.set_size = seed % 4 == 0 ? 4 : 3;
    params.max_ground = params.set_size == 3 ? 9 : 8;
    params.max_sets = 7;
    params.plant = seed % 3 == 0;
    auto inst = gen_cover_source(params, seed);
    CHECK(validate(inst));
    CHECK(covers_ground(inst));
    auto found = solve_exact_cover(inst);
    CHECK(found.has_value() == oracle::exact_cover_exists(inst));
    if (found) {
      CHECK(oracle::is_partition_of_ground(inst, *found));
      CHECK(is_exact_cover(inst, *found));
    }
    if (params.plant) CHECK(found.has_value());
    CHECK(gen_cover_source(params, seed) == inst);
  }
}

TEST_CASE("exact cover verifier rejects overlaps and gaps") {
  ExactCoverInstance inst{6, 3, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}}, {}};
  CHECK(is_exact_cover(inst, {0, 2}));
  CHECK_FALSE(is_exact_cover(inst, {0, 1}));
  CHECK_FALSE(is_exact_cover(inst, {0}));
  CHECK_FALSE(is_exact_cover(inst, {0, 2, 2}));
}

TEST_CASE("3-dimensional matching") {
  TripleSystem one{1, {{0, 0, 0}}};
  CHECK(solve_3dm(one) == std::vector<std::size_t>{0});
  TripleSystem short_of{2, {{0, 0, 0}}};
  CHECK_FALSE(solve_3dm(short_of));
  TripleSystem pair{2, {{0, 1, 0}, {0, 0, 0}, {1, 1, 1}}};
  auto m = solve_3dm(pair);
  REQUIRE(m);
  CHECK(*m == std::vector<std::size_t>{1, 2});
  CHECK(is_perfect_matching(pair, *m));
  CHECK_FALSE(is_perfect_matching(pair, {0, 2}));
  CHECK_FALSE(validate(TripleSystem{1, {{0, 1, 0}}}));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TripleSystem ts;
    ts.n = 1 + seed % 3;
    std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + 1;
    for (std::size_t t = 0; t < 2 + seed % 6; ++t) {
      std::array<int, 3> tr{};
      for (auto& c : tr) {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        c = static_cast<int>(x % ts.n);
      }
      ts.triples.push_back(tr);
    }
    auto found = solve_3dm(ts);
    CHECK(found.has_value() == oracle::matching_exists(ts));
    if (found) CHECK(is_perfect_matching(ts, *found));
  }
}
