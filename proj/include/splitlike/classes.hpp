#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitlike/graph.hpp"

namespace splitlike {

enum class PartitionKind { Clique, CompleteMultipartite };

/// Split-like certificate: K = union of `parts`, plus the independent set.
/// With kind Clique there is exactly one part and it is a clique (split
/// graph). With CompleteMultipartite the parts are the sides of a complete
/// k-partite graph: k = 1 is a bipartite graph, 2 bisplit, 3 trisplit.
struct SplitLikePartition {
  PartitionKind kind = PartitionKind::CompleteMultipartite;
  std::vector<VertexSet> parts;
  VertexSet independent;

  std::size_t k() const { return parts.size(); }
  VertexSet k_side() const;
  /// Index of the part containing v, or -1 when v is independent / absent.
  int part_of(Vertex v) const;

  friend bool operator==(const SplitLikePartition&, const SplitLikePartition&) = default;
};

/// Throws std::out_of_range if the partition mentions a vertex outside g.
bool verify_partition(const Graph& g, const SplitLikePartition& p);

struct BruteforceOptions {
  std::size_t max_vertices = 20;
};

/// Exhaustive certificate search for a complete-multipartite partition with
/// exactly k nonempty parts. Vertices are assigned in id order, trying parts
/// 0..k-1 before the independent side. Throws CapExceeded above the cap.
std::optional<SplitLikePartition> find_partition_bruteforce(const Graph& g, std::size_t k,
                                                            const BruteforceOptions& opts = {});

/// Degree-sequence split recognition; returns (clique, independent set).
std::optional<std::pair<VertexSet, VertexSet>> recognize_split(const Graph& g);

/// BFS 2-colouring. The side holding vertex 0 comes first.
std::optional<std::pair<VertexSet, VertexSet>> recognize_bipartite(const Graph& g);

struct StarOptions {
  std::size_t max_neighborhood = 24;
};

/// Largest r such that g has an induced K_{1,r}: max over v of the
/// independence number of g[N(v)]. Throws CapExceeded when some degree
/// exceeds the cap.
int max_induced_star(const Graph& g, const StarOptions& opts = {});
bool is_k1r_free(const Graph& g, int r, const StarOptions& opts = {});

struct ChordalResult {
  bool chordal = false;
  /// Perfect elimination ordering, filled only when chordal.
  std::vector<Vertex> elimination_order;
};

/// Lexicographic BFS followed by the elimination-order check.
ChordalResult is_chordal(const Graph& g);
std::vector<Vertex> lex_bfs_order(const Graph& g);

enum class ClawFreeBipartiteShape { Path, EvenCycle, NotInClass };
std::string to_string(ClawFreeBipartiteShape s);

/// Requires g connected (PreconditionError otherwise).
ClawFreeBipartiteShape classify_claw_free_bipartite(const Graph& g);

/// Characterisation test for chordal trisplit graphs against a fixed
/// 3-part certificate: two singleton parts, and every independent vertex has
/// degree at most 3 with no two neighbours in one part.
/// Throws PreconditionError on an invalid or non-3-part partition.
bool chordal_trisplit_check(const Graph& g, const SplitLikePartition& p);

/// Smallest x in `x_side` such that every y in `y_side` is pendant or adjacent to x.
std::optional<Vertex> star_center_bipartite(const Graph& g, const VertexSet& x_side, const VertexSet& y_side);

/// Biclique-side centre: x in the parts such that every independent vertex
/// is pendant or adjacent to x.
std::optional<Vertex> star_center_bisplit(const Graph& g, const SplitLikePartition& p);
/// Independent-side centre: x in I such that every biclique vertex is
/// pendant or adjacent to x.
std::optional<Vertex> star_center_bisplit_independent(const Graph& g, const SplitLikePartition& p);

/// For every pair x, y of independent vertices: N(x) and N(y) meet, or their
/// union is contained in neither part.
bool bisplit_diam3_condition(const Graph& g, const SplitLikePartition& p);

struct ClassReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool connected = false;
  std::optional<int> diameter;
  std::optional<std::pair<VertexSet, VertexSet>> bipartite;
  std::optional<std::pair<VertexSet, VertexSet>> split;
  bool chordal = false;
  std::optional<ClawFreeBipartiteShape> claw_shape;
  /// Complete-multipartite certificates, from the caller or brute force.
  std::optional<SplitLikePartition> bisplit;
  std::optional<SplitLikePartition> trisplit;
  /// Absent when some neighbourhood exceeds the exact-mode cap.
  std::optional<int> max_induced_star;
  std::optional<Vertex> star_center_bipartite_first;
  std::optional<Vertex> star_center_bipartite_second;
  std::optional<Vertex> star_center_biclique;
  std::optional<Vertex> star_center_independent;
};

struct ClassifyOptions {
  BruteforceOptions bruteforce;
  StarOptions star;
};

/// Runs every recognizer. A certificate passed in `hint` (if valid) is used
/// instead of brute force for its k.
ClassReport classify(const Graph& g, const std::optional<SplitLikePartition>& hint = std::nullopt,
                     const ClassifyOptions& opts = {});

}  // namespace splitlike
