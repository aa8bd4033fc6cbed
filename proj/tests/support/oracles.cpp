#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace oracle {

using splitlike::Edge;
using splitlike::Vertex;

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.size() > 64) throw std::invalid_argument("oracle limited to 64 vertices");
  std::vector<Mask> adj(g.size(), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

bool connected_mask(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return false;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

Mask mask_of(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

}  // namespace

std::size_t steiner_mask_scan(const Graph& g, const VertexSet& terminals) {
  const auto adj = adjacency_masks(g);
  const Mask r = mask_of(terminals);
  std::vector<Vertex> free;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!(r >> v & 1)) free.push_back(static_cast<Vertex>(v));
  }
  if (free.size() > 24) throw std::invalid_argument("mask scan limited to 24 free vertices");
  std::size_t best = free.size() + 1;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << free.size()); ++bits) {
    const auto size = static_cast<std::size_t>(std::popcount(bits));
    if (size >= best) continue;
    Mask s = r;
    for (std::uint32_t b = bits; b; b &= b - 1) s |= Mask{1} << free[static_cast<std::size_t>(std::countr_zero(b))];
    if (connected_mask(adj, s)) best = size;
  }
  if (best > free.size()) throw std::invalid_argument("terminals cannot be connected");
  return best;
}

std::size_t steiner_frontier(const Graph& g, const VertexSet& terminals) {
  const auto adj = adjacency_masks(g);
  if (g.size() > 24) throw std::invalid_argument("frontier oracle limited to 24 vertices");
  const Mask r = mask_of(terminals);
  std::vector<bool> seen(std::size_t{1} << g.size(), false);
  std::vector<Mask> level{Mask{1} << terminals.front()};
  seen[level.front()] = true;
  while (!level.empty()) {
    for (Mask s : level) {
      if ((s & r) == r) return static_cast<std::size_t>(std::popcount(s & ~r));
    }
    std::vector<Mask> next;
    for (Mask s : level) {
      Mask grow = 0;
      for (Mask f = s; f; f &= f - 1) grow |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      for (Mask cand = grow & ~s; cand; cand &= cand - 1) {
        const Mask t = s | (cand & (~cand + 1));
        if (!seen[t]) {
          seen[t] = true;
          next.push_back(t);
        }
      }
    }
    level = std::move(next);
  }
  throw std::invalid_argument("terminals cannot be connected");
}

std::optional<int> diameter_floyd(const Graph& g) {
  const std::size_t n = g.size();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : g.edges()) {
    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  int best = 0;
  for (const auto& row : d) {
    for (int x : row) {
      if (x >= inf) return std::nullopt;
      best = std::max(best, x);
    }
  }
  return best;
}

int star_up_to(const Graph& g, int cap) {
  int best = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(static_cast<Vertex>(v));
    std::vector<Vertex> chosen;
    // Depth-first over subsets of N(v) in index order, keeping them independent.
    auto rec = [&](auto&& self, std::size_t from) -> void {
      best = std::max(best, static_cast<int>(chosen.size()));
      if (static_cast<int>(chosen.size()) == cap) return;
      for (std::size_t i = from; i < nb.size(); ++i) {
        bool independent = true;
        for (Vertex c : chosen) independent = independent && !g.has_edge(c, nb[i]);
        if (!independent) continue;
        chosen.push_back(nb[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  }
  return best;
}

bool chordal_by_elimination(const Graph& g) {
  std::vector<bool> alive(g.size(), true);
  for (std::size_t round = 0; round < g.size(); ++round) {
    bool removed = false;
    for (std::size_t v = 0; v < g.size() && !removed; ++v) {
      if (!alive[v]) continue;
      std::vector<Vertex> nb;
      for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
        if (alive[static_cast<std::size_t>(u)]) nb.push_back(u);
      }
      bool simplicial = true;
      for (std::size_t i = 0; i < nb.size() && simplicial; ++i) {
        for (std::size_t j = i + 1; j < nb.size() && simplicial; ++j) simplicial = g.has_edge(nb[i], nb[j]);
      }
      if (simplicial) {
        alive[v] = false;
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool bipartite_by_colouring(const Graph& g) {
  if (g.size() > 20) throw std::invalid_argument("colouring oracle limited to 20 vertices");
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << g.size()); ++c) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && ((c >> u & 1) != (c >> v & 1));
    if (ok) return true;
  }
  return false;
}

bool split_by_subsets(const Graph& g) {
  if (g.size() > 20) throw std::invalid_argument("split oracle limited to 20 vertices");
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << g.size()); ++c) {
    bool ok = true;
    for (std::size_t u = 0; u < g.size() && ok; ++u) {
      for (std::size_t v = u + 1; v < g.size() && ok; ++v) {
        const bool in_k = (c >> u & 1) && (c >> v & 1);
        const bool in_i = !(c >> u & 1) && !(c >> v & 1);
        const bool e = g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (in_k && !e) ok = false;
        if (in_i && e) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool partition_ok(const Graph& g, const SplitLikePartition& p) {
  std::vector<int> label(g.size(), -2);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i]) {
      if (label[static_cast<std::size_t>(v)] != -2) return false;
      label[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (Vertex v : p.independent) {
    if (label[static_cast<std::size_t>(v)] != -2) return false;
    label[static_cast<std::size_t>(v)] = -1;
  }
  if (std::count(label.begin(), label.end(), -2) != 0) return false;
  const bool clique = p.kind == splitlike::PartitionKind::Clique;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      const int a = label[u], b = label[v];
      const bool e = g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (a == -1 && b == -1 && e) return false;
      if (a >= 0 && b >= 0) {
        const bool want = clique || a != b;
        if (want != e) return false;
      }
    }
  }
  return true;
}

bool has_partition(const Graph& g, std::size_t k) {
  const std::size_t n = g.size();
  std::vector<std::size_t> assign(n, 0);  // 0 = independent, 1..k = part
  for (;;) {
    SplitLikePartition p;
    p.parts.resize(k);
    std::vector<std::vector<Vertex>> parts(k);
    std::vector<Vertex> ind;
    for (std::size_t v = 0; v < n; ++v) {
      if (assign[v] == 0) ind.push_back(static_cast<Vertex>(v));
      else parts[assign[v] - 1].push_back(static_cast<Vertex>(v));
    }
    bool nonempty = true;
    for (std::size_t i = 0; i < k; ++i) {
      nonempty = nonempty && !parts[i].empty();
      p.parts[i] = VertexSet(parts[i]);
    }
    p.independent = VertexSet(ind);
    if (nonempty && partition_ok(g, p)) return true;
    std::size_t i = 0;
    while (i < n && ++assign[i] > k) assign[i++] = 0;
    if (i == n) return false;
  }
}

bool is_partition_of_ground(const splitlike::ExactCoverInstance& inst, const std::vector<std::size_t>& chosen) {
  std::vector<int> hits(inst.ground_size, 0);
  for (std::size_t c : chosen) {
    if (c >= inst.sets.size()) return false;
    for (int x : inst.sets[c]) ++hits[static_cast<std::size_t>(x)];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool exact_cover_exists(const splitlike::ExactCoverInstance& inst) {
  const std::size_t m = inst.sets.size();
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if (bits >> i & 1) chosen.push_back(i);
    }
    if (is_partition_of_ground(inst, chosen)) return true;
  }
  return false;
}

bool matching_exists(const splitlike::TripleSystem& ts) {
  const std::size_t m = ts.triples.size();
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) != ts.n) continue;
    std::vector<int> hits(3 * ts.n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(bits >> i & 1)) continue;
      for (std::size_t c = 0; c < 3; ++c) ++hits[c * ts.n + static_cast<std::size_t>(ts.triples[i][c])];
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::build(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, e);
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::build(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph::build(leaves + 1, e);
}

}  // namespace oracle
