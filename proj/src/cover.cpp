#include "splitlike/cover.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "splitlike/errors.hpp"

namespace splitlike {

std::string to_string(CoverIssue issue) {
  switch (issue) {
    case CoverIssue::None: return "ok";
    case CoverIssue::SetSizeTooSmall: return "set size below 3";
    case CoverIssue::GroundNotDivisible: return "ground set size not divisible by set size";
    case CoverIssue::WrongSetSize: return "set has wrong cardinality";
    case CoverIssue::ElementOutOfRange: return "element outside ground set";
    case CoverIssue::RepeatedElement: return "element repeated inside a set";
    case CoverIssue::OccurrenceCapExceeded: return "element occurs in too many sets";
  }
  return "?";
}

CoverValidation validate(const ExactCoverInstance& inst) {
  if (inst.set_size < 3) return {CoverIssue::SetSizeTooSmall, 0};
  if (inst.ground_size % inst.set_size != 0) return {CoverIssue::GroundNotDivisible, 0};
  std::vector<std::size_t> occurrences(inst.ground_size, 0);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    const auto& s = inst.sets[i];
    if (s.size() != inst.set_size) return {CoverIssue::WrongSetSize, i};
    for (int x : s) {
      if (x < 0 || static_cast<std::size_t>(x) >= inst.ground_size) return {CoverIssue::ElementOutOfRange, i};
    }
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {CoverIssue::RepeatedElement, i};
    for (int x : s) {
      if (inst.occurrence_cap && ++occurrences[static_cast<std::size_t>(x)] > *inst.occurrence_cap) {
        return {CoverIssue::OccurrenceCapExceeded, i};
      }
    }
  }
  return {};
}

bool covers_ground(const ExactCoverInstance& inst) {
  std::vector<char> hit(inst.ground_size, 0);
  for (const auto& s : inst.sets) {
    for (int x : s) {
      if (x >= 0 && static_cast<std::size_t>(x) < inst.ground_size) hit[static_cast<std::size_t>(x)] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<std::size_t>> solve_exact_cover(const ExactCoverInstance& inst, const CoverOptions& opts) {
  if (auto v = validate(inst); !v) throw std::invalid_argument("solve_exact_cover: " + to_string(v.issue));
  if (inst.sets.size() > opts.max_sets) {
    throw CapExceeded("solve_exact_cover: " + std::to_string(inst.sets.size()) + " sets exceeds cap " +
                      std::to_string(opts.max_sets));
  }
  std::vector<std::vector<std::size_t>> containing(inst.ground_size);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (int x : inst.sets[i]) containing[static_cast<std::size_t>(x)].push_back(i);
  }
  std::vector<char> covered(inst.ground_size, 0);
  std::vector<std::size_t> chosen;

  auto search = [&](auto&& self) -> bool {
    auto first = std::find(covered.begin(), covered.end(), 0);
    if (first == covered.end()) return true;
    std::size_t x = static_cast<std::size_t>(first - covered.begin());
    for (std::size_t i : containing[x]) {
      const auto& s = inst.sets[i];
      if (std::any_of(s.begin(), s.end(), [&](int y) { return covered[static_cast<std::size_t>(y)] != 0; })) continue;
      for (int y : s) covered[static_cast<std::size_t>(y)] = 1;
      chosen.push_back(i);
      if (self(self)) return true;
      chosen.pop_back();
      for (int y : s) covered[static_cast<std::size_t>(y)] = 0;
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_exact_cover(const ExactCoverInstance& inst, const std::vector<std::size_t>& chosen) {
  std::vector<int> count(inst.ground_size, 0);
  for (std::size_t i : chosen) {
    if (i >= inst.sets.size()) return false;
    for (int x : inst.sets[i]) {
      if (x < 0 || static_cast<std::size_t>(x) >= inst.ground_size) return false;
      ++count[static_cast<std::size_t>(x)];
    }
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

bool validate(const TripleSystem& ts) {
  for (const auto& t : ts.triples) {
    for (int c : t) {
      if (c < 0 || static_cast<std::size_t>(c) >= ts.n) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> solve_3dm(const TripleSystem& ts, const MatchingOptions& opts) {
  if (!validate(ts)) throw std::invalid_argument("solve_3dm: coordinate out of range");
  if (ts.triples.size() > opts.max_triples) {
    throw CapExceeded("solve_3dm: " + std::to_string(ts.triples.size()) + " triples exceeds cap " +
                      std::to_string(opts.max_triples));
  }
  std::vector<std::array<char, 3>> used(ts.n, {0, 0, 0});
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t p) -> bool {
    if (p == ts.n) return true;
    for (std::size_t i = 0; i < ts.triples.size(); ++i) {
      const auto& t = ts.triples[i];
      if (static_cast<std::size_t>(t[0]) != p) continue;
      if (used[static_cast<std::size_t>(t[1])][1] || used[static_cast<std::size_t>(t[2])][2]) continue;
      used[static_cast<std::size_t>(t[1])][1] = used[static_cast<std::size_t>(t[2])][2] = 1;
      chosen.push_back(i);
      if (self(self, p + 1)) return true;
      chosen.pop_back();
      used[static_cast<std::size_t>(t[1])][1] = used[static_cast<std::size_t>(t[2])][2] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool is_perfect_matching(const TripleSystem& ts, const std::vector<std::size_t>& chosen) {
  if (chosen.size() != ts.n) return false;
  std::vector<std::array<int, 3>> hits(ts.n, {0, 0, 0});
  for (std::size_t i : chosen) {
    if (i >= ts.triples.size()) return false;
    for (std::size_t c = 0; c < 3; ++c) ++hits[static_cast<std::size_t>(ts.triples[i][c])][c];
  }
  for (const auto& h : hits) {
    if (h[0] != 1 || h[1] != 1 || h[2] != 1) return false;
  }
  return true;
}

ExactCoverInstance gen_cover_source(const CoverSourceParams& params, std::uint64_t seed) {
  const std::size_t l = params.set_size;
  if (l < 3 || params.max_ground < l) throw std::invalid_argument("gen_cover_source: ground set too small for set size");
  std::mt19937_64 rng(seed);
  const std::size_t max_q = params.max_ground / l;
  const std::size_t q = std::uniform_int_distribution<std::size_t>(1, max_q)(rng);
  const std::size_t n = q * l;
  // At least q sets are needed to cover the ground set at all.
  const std::size_t max_sets = std::max(params.max_sets, q);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(q, max_sets)(rng);
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 0);

  for (int round = 0;; ++round) {
    ExactCoverInstance inst;
    inst.ground_size = n;
    inst.set_size = l;
    inst.occurrence_cap = params.occurrence_cap;
    std::vector<int> occurrences(n, 0);
    auto add = [&](std::vector<int> s) {
      std::sort(s.begin(), s.end());
      if (std::find(inst.sets.begin(), inst.sets.end(), s) != inst.sets.end()) return;
      if (inst.occurrence_cap && std::any_of(s.begin(), s.end(), [&](int x) {
            return static_cast<std::size_t>(occurrences[static_cast<std::size_t>(x)]) >= *inst.occurrence_cap;
          })) {
        return;
      }
      for (int x : s) ++occurrences[static_cast<std::size_t>(x)];
      inst.sets.push_back(std::move(s));
    };
    const bool plant = params.plant || round >= 50;
    if (plant) {
      std::shuffle(ground.begin(), ground.end(), rng);
      for (std::size_t b = 0; b < q; ++b) {
        add(std::vector<int>(ground.begin() + static_cast<std::ptrdiff_t>(b * l),
                             ground.begin() + static_cast<std::ptrdiff_t>((b + 1) * l)));
      }
    }
    std::bernoulli_distribution prefer_missing(0.5);
    auto random_set = [&](std::optional<int> must) {
      std::vector<int> pool = ground;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::stable_partition(pool.begin(), pool.end(), [&](int x) {
        return occurrences[static_cast<std::size_t>(x)] == 0 && prefer_missing(rng);
      });
      std::vector<int> s;
      if (must) s.push_back(*must);
      for (int x : pool) {
        if (s.size() == l) break;
        if (!must || x != *must) s.push_back(x);
      }
      return s;
    };
    for (std::size_t attempt = 0; attempt < 100; ++attempt) {
      auto missing = std::find(occurrences.begin(), occurrences.end(), 0);
      if (missing == occurrences.end()) break;
      add(random_set(static_cast<int>(missing - occurrences.begin())));
    }
    for (std::size_t attempt = 0; attempt < 100 && inst.sets.size() < target; ++attempt) add(random_set(std::nullopt));
    if (covers_ground(inst) && inst.sets.size() <= max_sets) {
      std::shuffle(inst.sets.begin(), inst.sets.end(), rng);
      return inst;
    }
  }
}

}  // namespace splitlike
