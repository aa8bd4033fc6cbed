#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitlike/classes.hpp"
#include "splitlike/cover.hpp"
#include "splitlike/steiner.hpp"

namespace splitlike {

/// Steiner instance produced from a cover source, with its class certificate.
struct ReductionArtifact {
  /// Short construction tag, e.g. "bisplit-d3".
  std::string construction;
  SteinerInstance instance;
  SplitLikePartition partition;
  std::string claimed_class;
  /// The artifact claims the graph is K_{1,r}-free for this r.
  std::optional<int> star_free_r;
  ExactCoverInstance source;
  /// names[v] is the name of vertex v (v_i, v'_i, u_j, t_i, v, u ...), 1-based indices.
  std::vector<std::string> names;
  std::vector<std::string> notes;

  std::size_t budget() const { return instance.budget.value_or(0); }
  friend bool operator==(const ReductionArtifact&, const ReductionArtifact&);
};

/// Graph-only construction from a 3DM source, with its clique certificates.
struct CliqueArtifact {
  Graph graph;
  std::vector<VertexSet> cliques;
  std::string claimed_class;
  int star_free_r = 4;
  TripleSystem source;
  std::vector<std::string> names;
};

/// Element vertices u_j, set vertices v_i, then the binary tree T over the
/// set vertices. R = A ∪ T, k = |X|/3. Requires l = 3 and every element in
/// one to three sets.
ReductionArtifact x3c3_to_k15free_bipartite(const ExactCoverInstance& src);

/// Every degree-4 non-terminal v becomes the path v1 - u - v2; v1 keeps v's
/// id and its two smallest neighbours, u and v2 are appended. k' = 3k.
/// Throws PreconditionError on a degree-4 terminal.
ReductionArtifact split_degree4_transform(const ReductionArtifact& src);

/// Ids: A (v_i), B (v'_i), I (u_j), I' (u'_j). R = I ∪ I', k = 2|X|/l.
ReductionArtifact xlc_to_bisplit(const ExactCoverInstance& src);

/// Ids: A, B, D, I, I', I''. R = I ∪ I' ∪ I'', k = |X|.
ReductionArtifact x3c_to_trisplit(const ExactCoverInstance& src);

/// Ids: A, B, I; both copies attached to the single I. R = I, k = |X|/3.
ReductionArtifact x3c_to_bisplit_diam3(const ExactCoverInstance& src);

/// Ids: A, B, D, I; all three copies attached to I. R = I, k = |X|/3.
ReductionArtifact x3c_to_trisplit_diam3(const ExactCoverInstance& src);

/// Ids: A (v_i), apex v, B (u_j). R = B ∪ {v}, k = |X|/3.
ReductionArtifact x3c_to_star_convex_bipartite(const ExactCoverInstance& src);

/// Ids: A, B, apex u, I' (u_j), I'' (u'_j). R = I' ∪ I'' ∪ {u}, k = 2|X|/3.
ReductionArtifact x3c_to_star_convex_bisplit_indep(const ExactCoverInstance& src);

/// Per triple j the ids a, b, c, x, y, z1, z2, z3, then p_i, q_i, r_i.
CliqueArtifact tdm_to_k14free_chordal(const TripleSystem& src);

/// Looks a construction up by its CLI tag (k15-bip, k14-bip, bisplit, ...).
/// k14-bip chains the K_{1,5}-free construction with the degree-4 split.
ReductionArtifact build_artifact(const std::string& target, const ExactCoverInstance& src);

}  // namespace splitlike
