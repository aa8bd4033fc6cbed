#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace splitlike {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  void insert(Vertex v);
  VertexSet united(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> ids_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built;
/// adjacency lists are sorted so every traversal order is deterministic.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on an out-of-range endpoint or a self-loop.
  /// Duplicate edges are merged.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  /// Edges as (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < size(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.size() == b.size(); }

 private:
  // flat adjacency: row v is adjacency_[offsets_[v], offsets_[v+1])
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

/// Result of induced_subgraph: `to_parent[i]` is the parent id of local vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// True iff g[s] is connected. Throws std::invalid_argument on an empty set.
bool is_connected_on(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Single-source BFS distances; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Per-vertex eccentricities, or nullopt when g is disconnected (infinite).
std::optional<std::vector<int>> eccentricities(const Graph& g);
/// nullopt stands for an infinite diameter (disconnected graph).
std::optional<int> diameter(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Throws std::out_of_range if some id of s is not a vertex of g.
void check_vertices(const Graph& g, const VertexSet& s);

}  // namespace splitlike
