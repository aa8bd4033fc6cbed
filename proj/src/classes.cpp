#include "splitlike/classes.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "splitlike/errors.hpp"

namespace splitlike {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Independence number of the graph given by bitmask rows over `count` vertices.
int independence_number(const std::vector<std::uint32_t>& rows, std::uint32_t mask, int best_so_far, int current) {
  if (mask == 0) return current;
  if (current + std::popcount(mask) <= best_so_far) return best_so_far;
  int v = std::countr_zero(mask);
  std::uint32_t bit = std::uint32_t{1} << v;
  // A vertex with no neighbour left in the mask is always taken.
  if ((rows[static_cast<std::size_t>(v)] & mask) == 0) {
    return independence_number(rows, mask & ~bit, best_so_far, current + 1);
  }
  int with = independence_number(rows, mask & ~bit & ~rows[static_cast<std::size_t>(v)], best_so_far, current + 1);
  best_so_far = std::max(best_so_far, with);
  int without = independence_number(rows, mask & ~bit, best_so_far, current);
  return std::max(with, without);
}

}  // namespace

VertexSet SplitLikePartition::k_side() const {
  VertexSet out;
  for (const auto& part : parts) out = out.united(part);
  return out;
}

int SplitLikePartition::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

bool verify_partition(const Graph& g, const SplitLikePartition& p) {
  for (const auto& part : p.parts) check_vertices(g, part);
  check_vertices(g, p.independent);
  if (p.parts.empty()) return false;
  if (p.kind == PartitionKind::Clique && p.parts.size() != 1) return false;

  // part id per vertex; -2 unassigned, -1 independent
  std::vector<int> label(g.size(), -2);
  std::size_t k_size = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) return false;
    for (Vertex v : p.parts[i]) {
      if (label[idx(v)] != -2) return false;
      label[idx(v)] = static_cast<int>(i);
    }
    k_size += p.parts[i].size();
  }
  for (Vertex v : p.independent) {
    if (label[idx(v)] != -2) return false;
    label[idx(v)] = -1;
  }
  if (std::find(label.begin(), label.end(), -2) != label.end()) return false;

  for (Vertex v : p.independent) {
    for (Vertex w : g.neighbors(v)) {
      if (label[idx(w)] == -1) return false;
    }
  }
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i]) {
      std::size_t same = 0;
      std::size_t other = 0;
      for (Vertex w : g.neighbors(v)) {
        int l = label[idx(w)];
        if (l < 0) continue;
        if (static_cast<std::size_t>(l) == i) ++same; else ++other;
      }
      if (p.kind == PartitionKind::Clique) {
        if (same != p.parts[i].size() - 1) return false;
      } else if (same != 0 || other != k_size - p.parts[i].size()) {
        return false;
      }
    }
  }
  return true;
}

std::optional<SplitLikePartition> find_partition_bruteforce(const Graph& g, std::size_t k,
                                                            const BruteforceOptions& opts) {
  if (g.size() > opts.max_vertices) {
    throw CapExceeded("find_partition_bruteforce: " + std::to_string(g.size()) + " vertices exceeds cap " +
                      std::to_string(opts.max_vertices));
  }
  if (k == 0) return std::nullopt;
  const std::size_t n = g.size();
  const int indep = static_cast<int>(k);
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> members(k + 1);

  auto fits = [&](Vertex v, int l) {
    for (std::size_t j = 0; j <= k; ++j) {
      for (Vertex w : members[j]) {
        bool adj = g.has_edge(v, w);
        if (static_cast<int>(j) == l) {
          if (adj) return false;  // parts and I are internally edgeless
        } else if (l != indep && static_cast<int>(j) != indep && !adj) {
          return false;  // distinct parts are completely joined
        }
      }
    }
    return true;
  };

  std::size_t used = 0;
  auto search = [&](auto&& self, std::size_t pos) -> bool {
    if (used + (n - pos) < k) return false;
    if (pos == n) return used == k;
    Vertex v = static_cast<Vertex>(pos);
    std::size_t top = std::min(used + 1, k);
    for (std::size_t l = 0; l < top; ++l) {
      if (!fits(v, static_cast<int>(l))) continue;
      bool fresh = members[l].empty();
      members[l].push_back(v);
      if (fresh) ++used;
      if (self(self, pos + 1)) return true;
      members[l].pop_back();
      if (fresh) --used;
    }
    if (fits(v, indep)) {
      members[k].push_back(v);
      if (self(self, pos + 1)) return true;
      members[k].pop_back();
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  SplitLikePartition p;
  p.kind = PartitionKind::CompleteMultipartite;
  for (std::size_t j = 0; j < k; ++j) p.parts.emplace_back(members[j]);
  p.independent = VertexSet(members[k]);
  return p;
}

std::optional<std::pair<VertexSet, VertexSet>> recognize_split(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // m = max{i : d_i >= i - 1}, 1-based
  std::size_t m = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(order[i]) >= i) m = i + 1;
  }
  std::size_t head = 0;
  std::size_t tail = 0;
  for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != m * (m == 0 ? 0 : m - 1) + tail) return std::nullopt;
  VertexSet clique(std::vector<Vertex>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m)));
  VertexSet rest(std::vector<Vertex>(order.begin() + static_cast<std::ptrdiff_t>(m), order.end()));
  return std::make_pair(clique, rest);
}

std::optional<std::pair<VertexSet, VertexSet>> recognize_bipartite(const Graph& g) {
  std::vector<int> color(g.size(), -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[idx(w)] < 0) {
          color[idx(w)] = 1 - color[idx(v)];
          queue.push_back(w);
        } else if (color[idx(w)] == color[idx(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Vertex> sides[2];
  for (std::size_t v = 0; v < g.size(); ++v) sides[color[v]].push_back(static_cast<Vertex>(v));
  return std::make_pair(VertexSet(sides[0]), VertexSet(sides[1]));
}

int max_induced_star(const Graph& g, const StarOptions& opts) {
  int best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    if (nb.size() > opts.max_neighborhood || nb.size() > 32) {
      throw CapExceeded("max_induced_star: vertex " + std::to_string(v) + " has degree " +
                        std::to_string(nb.size()) + " above cap " + std::to_string(opts.max_neighborhood));
    }
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    if (static_cast<int>(nb.size()) <= best) continue;
    std::vector<std::uint32_t> rows(nb.size(), 0);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.has_edge(nb[i], nb[j])) {
          rows[i] |= std::uint32_t{1} << j;
          rows[j] |= std::uint32_t{1} << i;
        }
      }
    }
    std::uint32_t all = nb.size() == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << nb.size()) - 1);
    best = std::max(best, independence_number(rows, all, best, 0));
  }
  return best;
}

bool is_k1r_free(const Graph& g, int r, const StarOptions& opts) { return max_induced_star(g, opts) < r; }

std::vector<Vertex> lex_bfs_order(const Graph& g) {
  // Partition refinement over a single array: cells are contiguous ranges and
  // a vertex's unvisited neighbours move to the front of their cell.
  const std::size_t n = g.size();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> pos(n);
  std::iota(pos.begin(), pos.end(), std::size_t{0});
  struct Cell {
    std::size_t start;
    std::size_t end;
    std::size_t moved;
  };
  std::vector<Cell> cells{{0, n, 0}};
  std::vector<std::size_t> cell_of(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<std::size_t> touched;

  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    visited[idx(v)] = 1;
    cells[cell_of[idx(v)]].start = i + 1;
    touched.clear();
    for (Vertex w : g.neighbors(v)) {
      if (visited[idx(w)]) continue;
      std::size_t c = cell_of[idx(w)];
      Cell& cell = cells[c];
      if (cell.moved == 0) touched.push_back(c);
      std::size_t target = cell.start + cell.moved;
      Vertex other = order[target];
      std::swap(order[target], order[pos[idx(w)]]);
      pos[idx(other)] = pos[idx(w)];
      pos[idx(w)] = target;
      ++cell.moved;
    }
    for (std::size_t c : touched) {
      Cell& cell = cells[c];
      std::size_t moved = cell.moved;
      cell.moved = 0;
      if (moved == cell.end - cell.start) continue;
      Cell fresh{cell.start, cell.start + moved, 0};
      cell.start += moved;
      std::size_t id = cells.size();
      cells.push_back(fresh);
      for (std::size_t p = fresh.start; p < fresh.end; ++p) cell_of[idx(order[p])] = id;
    }
  }
  return order;
}

ChordalResult is_chordal(const Graph& g) {
  const std::size_t n = g.size();
  auto visit = lex_bfs_order(g);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[idx(visit[i])] = i;
  // Elimination order is the reverse visit order; a vertex's later
  // neighbours are those visited earlier.
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = visit[i];
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (rank[idx(w)] < i && (parent < 0 || rank[idx(w)] > rank[idx(parent)])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && rank[idx(w)] < i && !g.has_edge(w, parent)) return {};
    }
  }
  ChordalResult r;
  r.chordal = true;
  r.elimination_order.assign(visit.rbegin(), visit.rend());
  return r;
}

std::string to_string(ClawFreeBipartiteShape s) {
  switch (s) {
    case ClawFreeBipartiteShape::Path: return "path";
    case ClawFreeBipartiteShape::EvenCycle: return "even-cycle";
    case ClawFreeBipartiteShape::NotInClass: return "not-in-class";
  }
  return "?";
}

ClawFreeBipartiteShape classify_claw_free_bipartite(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) throw PreconditionError("classify_claw_free_bipartite: graph must be connected");
  // In a bipartite graph every neighbourhood is independent, so claw-free
  // means maximum degree at most 2.
  if (!recognize_bipartite(g)) return ClawFreeBipartiteShape::NotInClass;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) > 2) return ClawFreeBipartiteShape::NotInClass;
  }
  if (g.edge_count() + 1 == g.size()) return ClawFreeBipartiteShape::Path;
  return ClawFreeBipartiteShape::EvenCycle;
}

bool chordal_trisplit_check(const Graph& g, const SplitLikePartition& p) {
  if (p.kind != PartitionKind::CompleteMultipartite || p.k() != 3 || !verify_partition(g, p)) {
    throw PreconditionError("chordal_trisplit_check: expected a valid 3-part trisplit certificate");
  }
  std::size_t singletons = 0;
  for (const auto& part : p.parts) singletons += part.size() == 1 ? 1 : 0;
  if (singletons < 2) return false;

  std::vector<int> label(g.size(), -1);
  for (std::size_t i = 0; i < 3; ++i) {
    for (Vertex v : p.parts[i]) label[idx(v)] = static_cast<int>(i);
  }
  for (Vertex u : p.independent) {
    if (g.degree(u) > 3) return false;
    bool seen[3] = {false, false, false};
    for (Vertex w : g.neighbors(u)) {
      int l = label[idx(w)];
      if (seen[l]) return false;
      seen[l] = true;
    }
  }
  return true;
}

namespace {

std::optional<Vertex> first_center(const Graph& g, const VertexSet& candidates, const VertexSet& others) {
  for (Vertex x : candidates) {
    bool ok = std::all_of(others.begin(), others.end(),
                          [&](Vertex y) { return y == x || g.degree(y) == 1 || g.has_edge(x, y); });
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Vertex> star_center_bipartite(const Graph& g, const VertexSet& x_side, const VertexSet& y_side) {
  check_vertices(g, x_side);
  check_vertices(g, y_side);
  return first_center(g, x_side, y_side);
}

std::optional<Vertex> star_center_bisplit(const Graph& g, const SplitLikePartition& p) {
  if (p.k() != 2 || !verify_partition(g, p)) throw PreconditionError("star_center_bisplit: expected a bisplit certificate");
  return first_center(g, p.k_side(), p.independent);
}

std::optional<Vertex> star_center_bisplit_independent(const Graph& g, const SplitLikePartition& p) {
  if (p.k() != 2 || !verify_partition(g, p)) {
    throw PreconditionError("star_center_bisplit_independent: expected a bisplit certificate");
  }
  return first_center(g, p.independent, p.k_side());
}

bool bisplit_diam3_condition(const Graph& g, const SplitLikePartition& p) {
  if (p.k() != 2 || p.kind != PartitionKind::CompleteMultipartite || !verify_partition(g, p)) {
    throw PreconditionError("bisplit_diam3_condition: expected a bisplit certificate");
  }
  const auto& indep = p.independent.ids();
  for (std::size_t i = 0; i < indep.size(); ++i) {
    VertexSet nx(std::vector<Vertex>(g.neighbors(indep[i]).begin(), g.neighbors(indep[i]).end()));
    for (std::size_t j = i + 1; j < indep.size(); ++j) {
      VertexSet ny(std::vector<Vertex>(g.neighbors(indep[j]).begin(), g.neighbors(indep[j]).end()));
      if (nx.intersects(ny)) continue;
      VertexSet both = nx.united(ny);
      if (both.subset_of(p.parts[0]) || both.subset_of(p.parts[1])) return false;
    }
  }
  return true;
}

ClassReport classify(const Graph& g, const std::optional<SplitLikePartition>& hint, const ClassifyOptions& opts) {
  ClassReport r;
  r.vertices = g.size();
  r.edges = g.edge_count();
  r.connected = g.size() > 0 && is_connected(g);
  r.diameter = diameter(g);
  r.bipartite = recognize_bipartite(g);
  r.split = recognize_split(g);
  r.chordal = is_chordal(g).chordal;
  if (r.connected) r.claw_shape = classify_claw_free_bipartite(g);

  bool hinted = hint && hint->kind == PartitionKind::CompleteMultipartite && verify_partition(g, *hint);
  if (hinted && hint->k() == 2) r.bisplit = hint;
  if (hinted && hint->k() == 3) r.trisplit = hint;
  if (g.size() <= opts.bruteforce.max_vertices) {
    if (!r.bisplit) r.bisplit = find_partition_bruteforce(g, 2, opts.bruteforce);
    if (!r.trisplit) r.trisplit = find_partition_bruteforce(g, 3, opts.bruteforce);
  }

  try {
    r.max_induced_star = max_induced_star(g, opts.star);
  } catch (const CapExceeded&) {
    r.max_induced_star = std::nullopt;
  }
  if (r.bipartite) {
    r.star_center_bipartite_first = star_center_bipartite(g, r.bipartite->first, r.bipartite->second);
    r.star_center_bipartite_second = star_center_bipartite(g, r.bipartite->second, r.bipartite->first);
  }
  if (r.bisplit) {
    r.star_center_biclique = star_center_bisplit(g, *r.bisplit);
    r.star_center_independent = star_center_bisplit_independent(g, *r.bisplit);
  }
  return r;
}

}  // namespace splitlike
