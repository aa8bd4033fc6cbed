#pragma once

#include <optional>
#include <vector>

#include "splitlike/graph.hpp"

namespace splitlike {

/// Node-count Steiner tree instance: connect `terminals` using as few extra
/// (Steiner) vertices as possible. `budget` is the decision-version k.
struct SteinerInstance {
  Graph graph;
  VertexSet terminals;
  std::optional<std::size_t> budget;
};

struct SteinerSolution {
  VertexSet steiner;
  /// Spanning tree of g[R ∪ S], edges (u, v) with u < v, sorted.
  std::vector<Edge> tree_edges;
};

/// Throws PreconditionError for an empty terminal set, std::out_of_range for
/// a terminal outside the graph, PreconditionError for a disconnected graph.
void validate_instance(const SteinerInstance& inst);

/// BFS tree of g[nodes] rooted at the smallest id; empty when g[nodes] is disconnected.
std::vector<Edge> bfs_tree(const Graph& g, const VertexSet& nodes);

/// Terminals plus Steiner vertices induce a connected subgraph.
bool connects_terminals(const Graph& g, const VertexSet& terminals, const VertexSet& steiner);

struct ExactOptions {
  /// Maximum number of non-terminal vertices the enumeration accepts.
  std::size_t max_free = 22;
};

/// Minimum-cardinality Steiner set; among minimum sets the lexicographically
/// smallest. Enumerates sets of non-terminals by increasing size, in
/// lexicographic order within a size. Throws CapExceeded above the cap.
SteinerSolution solve_exact(const SteinerInstance& inst, const ExactOptions& opts = {});

/// Same search stopped after sets of size `max_size`; nullopt if none fits.
std::optional<SteinerSolution> solve_exact_bounded(const SteinerInstance& inst, std::size_t max_size,
                                                   const ExactOptions& opts = {});

/// Is there a Steiner set of size at most k?
bool decide(const SteinerInstance& inst, std::size_t k, const ExactOptions& opts = {});

/// Checks S ∩ R = ∅ and that tree_edges is a spanning tree of g[R ∪ S] made of graph edges.
bool verify_solution(const SteinerInstance& inst, const SteinerSolution& sol);

/// Packages a Steiner set with its BFS tree.
SteinerSolution make_solution(const Graph& g, const VertexSet& terminals, VertexSet steiner);

}  // namespace splitlike
