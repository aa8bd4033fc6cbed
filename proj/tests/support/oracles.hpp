#pragma once

// Brute-force reference implementations. Each one deliberately uses a
// different method from the library routine it checks.

#include <cstddef>
#include <optional>
#include <vector>

#include "splitlike/classes.hpp"
#include "splitlike/cover.hpp"
#include "splitlike/graph.hpp"

namespace oracle {

using splitlike::Graph;
using splitlike::SplitLikePartition;
using splitlike::VertexSet;

// Minimum Steiner count by scanning every subset of non-terminals as a
// plain bitmask, 0 .. 2^f - 1.
std::size_t steiner_mask_scan(const Graph& g, const VertexSet& terminals);

// Minimum Steiner count by growing connected vertex sets around the first
// terminal, one vertex at a time, breadth first over set sizes.
std::size_t steiner_frontier(const Graph& g, const VertexSet& terminals);

// Floyd-Warshall; nullopt when disconnected.
std::optional<int> diameter_floyd(const Graph& g);

// Largest r <= cap with an induced K_{1,r}, from all subsets of each
// neighbourhood of size at most cap.
int star_up_to(const Graph& g, int cap);

// Repeated simplicial-vertex removal.
bool chordal_by_elimination(const Graph& g);

// Tries all 2-colourings.
bool bipartite_by_colouring(const Graph& g);

// Tries every clique / independent split of the vertex set.
bool split_by_subsets(const Graph& g);

// Some valid k-part certificate exists (all assignments tried).
bool has_partition(const Graph& g, std::size_t k);

bool exact_cover_exists(const splitlike::ExactCoverInstance& inst);
bool matching_exists(const splitlike::TripleSystem& ts);

// Every listed subfamily member used once, covering everything.
bool is_partition_of_ground(const splitlike::ExactCoverInstance& inst, const std::vector<std::size_t>& chosen);

// Independent check of a certificate against the definition.
bool partition_ok(const Graph& g, const SplitLikePartition& p);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph star(std::size_t leaves);

}  // namespace oracle
