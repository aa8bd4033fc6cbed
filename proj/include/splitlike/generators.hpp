#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splitlike/classes.hpp"
#include "splitlike/graph.hpp"

namespace splitlike {

struct SplitLikeParams {
  std::vector<std::size_t> part_sizes;
  std::size_t independent_size = 0;
  double attach_prob = 0.5;
  /// Clique requires exactly one part size.
  PartitionKind kind = PartitionKind::CompleteMultipartite;
};

/// Seeded random split-like graph. Ids: parts in order, then the independent
/// vertices. Each independent vertex joins each K vertex with `attach_prob`;
/// one left isolated is attached to a single uniformly chosen K vertex. With
/// one multipartite part (bipartite case) leftover components are linked to
/// the component of vertex 0.
std::pair<Graph, SplitLikePartition> gen_random_split_like(const SplitLikeParams& params, std::uint64_t seed);

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_star(std::size_t leaves);

/// G(n, p) plus repair edges joining each component to the one of vertex 0.
Graph gen_random_connected(std::size_t n, double p, std::uint64_t seed);

/// Chordal trisplit graph satisfying the two-singleton shape: parts {a}, {b},
/// {c_1..c_m}; each independent vertex gets a nonempty neighbourhood inside
/// {a, b, one c}. Ids: a = 0, b = 1, c's, then the independent vertices.
std::pair<Graph, SplitLikePartition> gen_chordal_trisplit(std::size_t big_part, std::size_t independent,
                                                          std::uint64_t seed);

/// Random k-split graph with k-1 singleton parts and one part of size
/// `big_part`. Independent vertices either see a subset of the hubs plus at
/// most one big-part vertex, or (with `full_hub_prob`) all hubs plus two or
/// more big-part vertices. The result is not guaranteed chordal.
std::pair<Graph, SplitLikePartition> gen_hub_ksplit(std::size_t k, std::size_t big_part, std::size_t independent,
                                                    double full_hub_prob, std::uint64_t seed);

/// Seeded uniform subset of `pool` with size in [min_size, max_size].
VertexSet random_subset(const VertexSet& pool, std::size_t min_size, std::size_t max_size, std::uint64_t seed);

}  // namespace splitlike
