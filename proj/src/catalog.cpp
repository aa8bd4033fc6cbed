#include "splitlike/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace splitlike {

namespace {

constexpr std::size_t kMaxVertices = 11;
using Rows = std::array<std::uint16_t, kMaxVertices>;
using Cells = std::vector<std::vector<int>>;

bool adjacent(const Rows& adj, int u, int v) { return (adj[static_cast<std::size_t>(u)] >> v) & 1; }

// Splits cells by neighbour counts into each cell until stable. New cells
// are ordered by count, so the result does not depend on vertex labels.
void refine(const Rows& adj, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      std::uint16_t splitter = 0;
      for (int v : cells[s]) splitter |= static_cast<std::uint16_t>(1u << v);
      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cells[c]) keyed.emplace_back(std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(v)] & splitter)), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells parts;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
          parts.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
        changed = true;
      }
    }
  }
}

bool twins(const Rows& adj, const std::vector<int>& cell) {
  for (std::size_t i = 1; i < cell.size(); ++i) {
    auto mask = static_cast<std::uint16_t>(~((1u << cell[0]) | (1u << cell[i])));
    if ((adj[static_cast<std::size_t>(cell[0])] & mask) != (adj[static_cast<std::size_t>(cell[i])] & mask)) return false;
  }
  return true;
}

std::uint64_t leaf_code(const Rows& adj, const Cells& cells) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) code = code << 1 | (adjacent(adj, cells[i][0], cells[j][0]) ? 1 : 0);
  }
  return code;
}

void search(const Rows& adj, Cells cells, std::uint64_t& best, bool& found) {
  refine(adj, cells);
  auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (target == cells.end()) {
    std::uint64_t code = leaf_code(adj, cells);
    if (!found || code < best) best = code;
    found = true;
    return;
  }
  const std::size_t t = static_cast<std::size_t>(target - cells.begin());
  const std::vector<int> cell = cells[t];
  // Swapping two twins is an automorphism, so one branch covers the cell.
  const std::size_t branches = twins(adj, cell) ? 1 : cell.size();
  for (std::size_t i = 0; i < branches; ++i) {
    Cells next = cells;
    std::vector<int> rest;
    for (int v : cell) {
      if (v != cell[i]) rest.push_back(v);
    }
    next[t] = {cell[i]};
    next.insert(next.begin() + static_cast<std::ptrdiff_t>(t) + 1, rest);
    search(adj, std::move(next), best, found);
  }
}

std::uint64_t canonical_rows(const Rows& adj, std::size_t n) {
  Cells cells(1);
  for (std::size_t v = 0; v < n; ++v) cells[0].push_back(static_cast<int>(v));
  if (n == 0) return 0;
  std::uint64_t best = 0;
  bool found = false;
  search(adj, cells, best, found);
  return best;
}

Rows rows_of(const Graph& g) {
  Rows adj{};
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  }
  return adj;
}

Graph graph_of(const Rows& adj, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if ((adj[u] >> v) & 1) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::build(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.size() > kMaxVertices) throw std::invalid_argument("canonical_code: at most 11 vertices");
  return canonical_rows(rows_of(g), g.size());
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > kMaxVertices) throw std::invalid_argument("connected_graphs: at most 11 vertices");
  if (n == 0) return {};
  std::vector<Graph> level{Graph::build(1, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::unordered_map<std::uint64_t, Rows> seen;
    for (const Graph& g : level) {
      const Rows base = rows_of(g);
      const std::size_t v = size - 1;
      for (std::uint32_t mask = 1; mask < (1u << v); ++mask) {
        Rows adj = base;
        adj[v] = static_cast<std::uint16_t>(mask);
        for (std::size_t u = 0; u < v; ++u) {
          if ((mask >> u) & 1) adj[u] |= static_cast<std::uint16_t>(1u << v);
        }
        seen.try_emplace(canonical_rows(adj, size), adj);
      }
    }
    std::vector<std::pair<std::uint64_t, Rows>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (const auto& [code, adj] : sorted) level.push_back(graph_of(adj, size));
  }
  return level;
}

}  // namespace splitlike
