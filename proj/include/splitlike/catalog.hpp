#pragma once

#include <cstdint>
#include <vector>

#include "splitlike/graph.hpp"

namespace splitlike {

/// Canonical adjacency code: equal for two graphs on the same number of
/// vertices iff they are isomorphic. Supports n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices, ordered by canonical code. Built by extending the (n-1)-vertex
/// catalog with one vertex and every nonempty neighbourhood.
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace splitlike
