#pragma once

#include <optional>
#include <string>

#include "splitlike/classes.hpp"
#include "splitlike/steiner.hpp"

namespace splitlike {

enum class PolyAlgorithm {
  Hub,
  ClawFreeBipartite,
  ChordalTrisplit,
  ChordalKSplit,
  StarConvexBisplit,
  FiniteBisplit,
  FiniteTrisplit,
  Exact,
};
std::string to_string(PolyAlgorithm a);

struct PolyResult {
  SteinerSolution solution;
  PolyAlgorithm algorithm = PolyAlgorithm::Exact;
  /// Human-readable description of the certificate the solver relied on.
  /// Vertex ids in it are 1-based, like the STP files.
  std::string certificate;
};

/// Paths and even cycles. Throws PreconditionError on any other graph.
PolyResult solve_claw_free_bipartite(const SteinerInstance& inst);

/// S = ∅ when g[R] is connected, else the smallest non-terminal adjacent to
/// every terminal. nullopt when neither applies.
std::optional<PolyResult> solve_via_hub(const SteinerInstance& inst);

/// Linear-time solver for chordal trisplit graphs with R ⊆ I. Requires
/// chordal_trisplit_check(g, p). The singleton parts play the roles a, b.
PolyResult solve_chordal_trisplit(const SteinerInstance& inst, const SplitLikePartition& p);

/// The bare four-candidate family {S0, S0+a, S0+b, S0+a+b}, kept for
/// comparison. Can miss the optimum when no terminal is pendant.
VertexSet chordal_trisplit_four_candidates(const SteinerInstance& inst, const SplitLikePartition& p);

struct KSplitOptions {
  /// Upper bound on singleton parts (subsets of them are enumerated).
  std::size_t max_hubs = 16;
};

/// Chordal k-split graphs, k >= 2, R ⊆ I, at most one part larger than one.
PolyResult solve_chordal_ksplit(const SteinerInstance& inst, const SplitLikePartition& p,
                                const KSplitOptions& opts = {});

/// Star-convex bisplit graph with centre x on the biclique, R ⊆ I.
PolyResult solve_star_convex_bisplit_biclique(const SteinerInstance& inst, const SplitLikePartition& p, Vertex x);

/// K_{1,r}-free bisplit / trisplit graphs: checks the class and the vertex
/// bound 2r(r-1) / 3r(r-1), then runs the exact search.
PolyResult solve_k1rfree_bisplit(const SteinerInstance& inst, const SplitLikePartition& p, int r);
PolyResult solve_k1rfree_trisplit(const SteinerInstance& inst, const SplitLikePartition& p, int r);

struct DispatchOptions {
  /// Largest r for which the finite-class route is considered.
  int finite_r = 4;
  KSplitOptions ksplit;
};

/// Tries hub, claw-free bipartite, chordal k-split, star-convex bisplit and
/// the finite classes in that order. nullopt means no specialised algorithm
/// applies.
std::optional<PolyResult> dispatch(const SteinerInstance& inst, const ClassReport& report,
                                   const DispatchOptions& opts = {});

}  // namespace splitlike
