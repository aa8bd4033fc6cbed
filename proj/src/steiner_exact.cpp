#include <algorithm>
#include <string>

#include "splitlike/errors.hpp"
#include "splitlike/steiner.hpp"

namespace splitlike {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Lexicographic subset search over the non-terminals with a coverage cut:
// a terminal without terminal neighbours needs a chosen neighbour, so once
// the search moves past its last candidate neighbour the branch dies.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, const VertexSet& terminals) : g_(g), in_tree_(g.size(), 0) {
    for (Vertex t : terminals) in_tree_[idx(t)] = 1;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!in_tree_[v]) candidates_.push_back(static_cast<Vertex>(v));
    }
    std::vector<int> position(g.size(), -1);
    for (std::size_t i = 0; i < candidates_.size(); ++i) position[idx(candidates_[i])] = static_cast<int>(i);
    need_at_.assign(candidates_.size(), {});
    cover_.assign(g.size(), 0);
    for (Vertex t : terminals) {
      bool has_terminal_neighbor = false;
      int last = -1;
      for (Vertex w : g.neighbors(t)) {
        if (in_tree_[idx(w)]) has_terminal_neighbor = true;
        else last = std::max(last, position[idx(w)]);
      }
      if (has_terminal_neighbor || terminals.size() < 2) continue;
      if (last < 0) {
        hopeless_ = true;
        continue;
      }
      need_at_[static_cast<std::size_t>(last)].push_back(t);
      needy_.push_back(t);
    }
    uncovered_ = needy_.size();
    terminal_count_ = terminals.size();
  }

  std::size_t free_count() const { return candidates_.size(); }

  std::optional<VertexSet> find(std::size_t size) {
    if (hopeless_ || size > candidates_.size()) return std::nullopt;
    chosen_.clear();
    if (!descend(0, size)) return std::nullopt;
    return VertexSet(chosen_);
  }

 private:
  void choose(Vertex c, int delta) {
    in_tree_[idx(c)] = static_cast<char>(delta > 0 ? 2 : 0);
    for (Vertex w : g_.neighbors(c)) {
      if (in_tree_[idx(w)] != 1) continue;
      int before = cover_[idx(w)];
      cover_[idx(w)] += delta;
      if (before == 0 && delta > 0 && is_needy(w)) --uncovered_;
      if (cover_[idx(w)] == 0 && delta < 0 && is_needy(w)) ++uncovered_;
    }
  }

  bool is_needy(Vertex t) const { return std::binary_search(needy_sorted().begin(), needy_sorted().end(), t); }
  const std::vector<Vertex>& needy_sorted() const {
    if (!needy_ready_) {
      needy_cache_ = needy_;
      std::sort(needy_cache_.begin(), needy_cache_.end());
      needy_ready_ = true;
    }
    return needy_cache_;
  }

  bool descend(std::size_t start, std::size_t remaining) {
    if (remaining == 0) return uncovered_ == 0 && connected();
    for (std::size_t i = start; i + remaining <= candidates_.size(); ++i) {
      Vertex c = candidates_[i];
      choose(c, +1);
      chosen_.push_back(c);
      if (descend(i + 1, remaining - 1)) return true;
      chosen_.pop_back();
      choose(c, -1);
      // Skipping candidate i from here on: its dependants must already be covered.
      for (Vertex t : need_at_[i]) {
        if (cover_[idx(t)] == 0) return false;
      }
    }
    return false;
  }

  bool connected() {
    // in_tree_: 1 terminal, 2 chosen; BFS marks visited with the high bit.
    std::size_t total = terminal_count_ + chosen_.size();
    Vertex root = chosen_.empty() ? -1 : chosen_.front();
    for (std::size_t v = 0; v < in_tree_.size() && root < 0; ++v) {
      if (in_tree_[v]) root = static_cast<Vertex>(v);
    }
    stack_.assign(1, root);
    in_tree_[idx(root)] |= 4;
    std::size_t reached = 1;
    while (!stack_.empty()) {
      Vertex v = stack_.back();
      stack_.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        char& m = in_tree_[idx(w)];
        if ((m & 3) && !(m & 4)) {
          m |= 4;
          ++reached;
          stack_.push_back(w);
        }
      }
    }
    for (auto& m : in_tree_) m &= 3;
    return reached == total;
  }

  const Graph& g_;
  std::vector<char> in_tree_;
  std::vector<Vertex> candidates_;
  std::vector<std::vector<Vertex>> need_at_;
  std::vector<Vertex> needy_;
  mutable std::vector<Vertex> needy_cache_;
  mutable bool needy_ready_ = false;
  std::vector<int> cover_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> stack_;
  std::size_t uncovered_ = 0;
  std::size_t terminal_count_ = 0;
  bool hopeless_ = false;
};

}  // namespace

void validate_instance(const SteinerInstance& inst) {
  if (inst.terminals.empty()) throw PreconditionError("Steiner instance has no terminals");
  check_vertices(inst.graph, inst.terminals);
  if (!is_connected(inst.graph)) throw PreconditionError("Steiner instance graph is disconnected");
}

std::vector<Edge> bfs_tree(const Graph& g, const VertexSet& nodes) {
  if (nodes.empty()) return {};
  std::vector<char> state(g.size(), 0);
  for (Vertex v : nodes) state[idx(v)] = 1;
  std::vector<Edge> tree;
  std::vector<Vertex> queue{nodes.front()};
  state[idx(nodes.front())] = 2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (state[idx(w)] == 1) {
        state[idx(w)] = 2;
        queue.push_back(w);
        tree.emplace_back(std::min(v, w), std::max(v, w));
      }
    }
  }
  if (queue.size() != nodes.size()) return {};
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool connects_terminals(const Graph& g, const VertexSet& terminals, const VertexSet& steiner) {
  return is_connected_on(g, terminals.united(steiner));
}

SteinerSolution make_solution(const Graph& g, const VertexSet& terminals, VertexSet steiner) {
  SteinerSolution sol;
  sol.tree_edges = bfs_tree(g, terminals.united(steiner));
  sol.steiner = std::move(steiner);
  return sol;
}

std::optional<SteinerSolution> solve_exact_bounded(const SteinerInstance& inst, std::size_t max_size,
                                                   const ExactOptions& opts) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  if (is_connected_on(g, inst.terminals)) return make_solution(g, inst.terminals, {});
  SubsetSearch search(g, inst.terminals);
  if (search.free_count() > opts.max_free) {
    throw CapExceeded("solve_exact: " + std::to_string(search.free_count()) + " non-terminals exceeds cap " +
                      std::to_string(opts.max_free));
  }
  for (std::size_t size = 1; size <= std::min(max_size, search.free_count()); ++size) {
    if (auto s = search.find(size)) return make_solution(g, inst.terminals, std::move(*s));
  }
  return std::nullopt;
}

SteinerSolution solve_exact(const SteinerInstance& inst, const ExactOptions& opts) {
  auto sol = solve_exact_bounded(inst, inst.graph.size(), opts);
  // A connected graph always admits S = V \ R.
  return std::move(*sol);
}

bool decide(const SteinerInstance& inst, std::size_t k, const ExactOptions& opts) {
  return solve_exact_bounded(inst, k, opts).has_value();
}

bool verify_solution(const SteinerInstance& inst, const SteinerSolution& sol) {
  const Graph& g = inst.graph;
  for (Vertex v : sol.steiner) {
    if (!g.contains(v)) return false;
  }
  if (sol.steiner.intersects(inst.terminals)) return false;
  VertexSet nodes = inst.terminals.united(sol.steiner);
  if (nodes.empty() || sol.tree_edges.size() + 1 != nodes.size()) return false;
  // n-1 graph edges inside the node set that connect it form a spanning tree.
  std::vector<std::vector<Vertex>> adj(g.size());
  for (auto [u, v] : sol.tree_edges) {
    if (!nodes.contains(u) || !nodes.contains(v) || !g.has_edge(u, v)) return false;
    adj[idx(u)].push_back(v);
    adj[idx(v)].push_back(u);
  }
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack{nodes.front()};
  seen[idx(nodes.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[idx(v)]) {
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

}  // namespace splitlike
