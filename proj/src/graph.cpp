#include "splitlike/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace splitlike {

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  VertexSet r;
  r.ids_ = std::move(out);
  return r;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") with n = " + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : g.edges_) {
    ++g.offsets_[static_cast<std::size_t>(u) + 1];
    ++g.offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // edges are sorted, so smaller neighbours land first in every row
  for (auto [u, v] : g.edges_) g.adjacency_[fill[static_cast<std::size_t>(v)]++] = u;
  for (auto [u, v] : g.edges_) g.adjacency_[fill[static_cast<std::size_t>(u)]++] = v;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto a = neighbors(u);
  auto b = neighbors(v);
  if (a.size() > b.size()) std::swap(a, b), std::swap(u, v);
  return std::binary_search(b.begin(), b.end(), u);
}

void check_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(g.size()) + ")");
    }
  }
}

bool is_connected_on(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("is_connected_on: empty vertex set");
  check_vertices(g, s);
  std::vector<char> inside(g.size(), 0);
  for (Vertex v : s) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> stack{s.front()};
  inside[static_cast<std::size_t>(s.front())] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (inside[static_cast<std::size_t>(w)] == 1) {
        inside[static_cast<std::size_t>(w)] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.size(), -1);
  std::vector<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::vector<int>> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto d = bfs_distances(g, static_cast<Vertex>(v));
    for (int x : d) {
      if (x < 0) return std::nullopt;
      ecc[v] = std::max(ecc[v], x);
    }
  }
  return ecc;
}

std::optional<int> diameter(const Graph& g) {
  auto ecc = eccentricities(g);
  if (!ecc) return std::nullopt;
  return ecc->empty() ? 0 : *std::max_element(ecc->begin(), ecc->end());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  std::vector<Vertex> local(g.size(), -1);
  InducedSubgraph out;
  out.to_parent = s.ids();
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) local[static_cast<std::size_t>(out.to_parent[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex lu = local[static_cast<std::size_t>(u)];
    Vertex lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
  }
  out.graph = Graph::build(s.size(), edges);
  return out;
}

}  // namespace splitlike
