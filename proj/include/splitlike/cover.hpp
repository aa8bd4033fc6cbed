#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splitlike {

/// Exact cover by l-sets over the ground set {0, .., ground_size - 1}.
/// `occurrence_cap` = 3 gives X3C-3; absent for X3C / XlC.
struct ExactCoverInstance {
  std::size_t ground_size = 0;
  std::size_t set_size = 3;
  std::vector<std::vector<int>> sets;
  std::optional<std::size_t> occurrence_cap;

  std::size_t q() const { return set_size == 0 ? 0 : ground_size / set_size; }
  friend bool operator==(const ExactCoverInstance&, const ExactCoverInstance&) = default;
};

enum class CoverIssue {
  None,
  SetSizeTooSmall,
  GroundNotDivisible,
  WrongSetSize,
  ElementOutOfRange,
  RepeatedElement,
  OccurrenceCapExceeded,
};
std::string to_string(CoverIssue issue);

struct CoverValidation {
  CoverIssue issue = CoverIssue::None;
  std::size_t set_index = 0;
  explicit operator bool() const { return issue == CoverIssue::None; }
};

CoverValidation validate(const ExactCoverInstance& inst);
/// True iff every ground element lies in at least one set.
bool covers_ground(const ExactCoverInstance& inst);

struct CoverOptions {
  std::size_t max_sets = 24;
};

/// Depth-first exact cover: branch on the smallest uncovered element, trying
/// the sets that contain it in index order. Returns chosen set indices.
/// Throws CapExceeded above the set cap and std::invalid_argument on an
/// invalid instance.
std::optional<std::vector<std::size_t>> solve_exact_cover(const ExactCoverInstance& inst, const CoverOptions& opts = {});

/// Independent check that `chosen` partitions the ground set.
bool is_exact_cover(const ExactCoverInstance& inst, const std::vector<std::size_t>& chosen);

/// 3-dimensional matching: coordinates index P, Q, R, each of size n.
struct TripleSystem {
  std::size_t n = 0;
  std::vector<std::array<int, 3>> triples;
  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

bool validate(const TripleSystem& ts);

struct MatchingOptions {
  std::size_t max_triples = 20;
};

/// Branches on the smallest unmatched P element, trying triples in index order.
std::optional<std::vector<std::size_t>> solve_3dm(const TripleSystem& ts, const MatchingOptions& opts = {});
bool is_perfect_matching(const TripleSystem& ts, const std::vector<std::size_t>& chosen);

struct CoverSourceParams {
  std::size_t set_size = 3;
  std::size_t max_ground = 9;
  std::size_t max_sets = 6;
  std::optional<std::size_t> occurrence_cap;
  /// Plant a partition first, then pad with noise sets.
  bool plant = false;
};

/// Seeded random source with every element covered and distinct sets.
ExactCoverInstance gen_cover_source(const CoverSourceParams& params, std::uint64_t seed);

}  // namespace splitlike
