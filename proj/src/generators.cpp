#include "splitlike/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace splitlike {

namespace {

// Union of component roots, used only for the bipartite repair step.
struct Components {
  explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

std::pair<Graph, SplitLikePartition> gen_random_split_like(const SplitLikeParams& params, std::uint64_t seed) {
  if (params.part_sizes.empty()) throw std::invalid_argument("gen_random_split_like: no parts");
  if (std::any_of(params.part_sizes.begin(), params.part_sizes.end(), [](std::size_t s) { return s == 0; })) {
    throw std::invalid_argument("gen_random_split_like: part sizes must be positive");
  }
  if (params.attach_prob < 0.0 || params.attach_prob > 1.0) {
    throw std::invalid_argument("gen_random_split_like: probability outside [0, 1]");
  }
  if (params.kind == PartitionKind::Clique && params.part_sizes.size() != 1) {
    throw std::invalid_argument("gen_random_split_like: a clique certificate has exactly one part");
  }
  const bool bipartite = params.kind == PartitionKind::CompleteMultipartite && params.part_sizes.size() == 1;
  if (bipartite && params.independent_size == 0 && params.part_sizes[0] > 1) {
    throw std::invalid_argument("gen_random_split_like: a bipartite shape needs independent vertices to be connected");
  }

  std::mt19937_64 rng(seed);
  SplitLikePartition p;
  p.kind = params.kind;
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::size_t size : params.part_sizes) {
    std::vector<Vertex> ids(size);
    std::iota(ids.begin(), ids.end(), next);
    next += static_cast<Vertex>(size);
    p.parts.emplace_back(ids);
  }
  const Vertex k_count = next;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex u : p.parts[i]) {
      if (params.kind == PartitionKind::Clique) {
        for (Vertex v : p.parts[i]) {
          if (u < v) edges.emplace_back(u, v);
        }
      }
      for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
        for (Vertex v : p.parts[j]) edges.emplace_back(u, v);
      }
    }
  }

  std::bernoulli_distribution coin(params.attach_prob);
  std::uniform_int_distribution<Vertex> pick_k(0, k_count - 1);
  std::vector<Vertex> indep;
  for (std::size_t i = 0; i < params.independent_size; ++i) {
    Vertex u = next++;
    indep.push_back(u);
    bool attached = false;
    for (Vertex v = 0; v < k_count; ++v) {
      if (coin(rng)) {
        edges.emplace_back(v, u);
        attached = true;
      }
    }
    if (!attached) edges.emplace_back(pick_k(rng), u);
  }
  p.independent = VertexSet(indep);

  if (bipartite && !indep.empty()) {
    // K is edgeless here: give every K vertex an independent neighbour, then
    // join each remaining component to the one holding vertex 0.
    std::uniform_int_distribution<std::size_t> pick_i(0, indep.size() - 1);
    std::vector<char> touched(static_cast<std::size_t>(k_count), 0);
    for (auto [u, v] : edges) touched[static_cast<std::size_t>(std::min(u, v))] = 1;
    for (Vertex v = 0; v < k_count; ++v) {
      if (!touched[static_cast<std::size_t>(v)]) edges.emplace_back(v, indep[pick_i(rng)]);
    }
    Components comp(static_cast<std::size_t>(next));
    for (auto [u, v] : edges) comp.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    for (Vertex v = 1; v < k_count; ++v) {
      if (comp.find(static_cast<std::size_t>(v)) == comp.find(0)) continue;
      std::vector<Vertex> targets;
      for (Vertex w : indep) {
        if (comp.find(static_cast<std::size_t>(w)) == comp.find(0)) targets.push_back(w);
      }
      Vertex w = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
      edges.emplace_back(v, w);
      comp.unite(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
    }
  }
  return {Graph::build(static_cast<std::size_t>(next), edges), p};
}

Graph gen_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::build(n, edges);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::build(n, edges);
}

Graph gen_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph::build(n, edges);
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph::build(leaves + 1, edges);
}

Graph gen_random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  Components comp(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        comp.unite(i, j);
      }
    }
  }
  for (std::size_t v = 1; v < n; ++v) {
    if (comp.find(v) == comp.find(0)) continue;
    std::vector<std::size_t> inside;
    for (std::size_t w = 0; w < n; ++w) {
      if (comp.find(w) == comp.find(0)) inside.push_back(w);
    }
    std::size_t w = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)];
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
    comp.unite(v, w);
  }
  return Graph::build(n, edges);
}

std::pair<Graph, SplitLikePartition> gen_chordal_trisplit(std::size_t big_part, std::size_t independent,
                                                          std::uint64_t seed) {
  if (big_part == 0) throw std::invalid_argument("gen_chordal_trisplit: third part must be nonempty");
  std::mt19937_64 rng(seed);
  const Vertex a = 0;
  const Vertex b = 1;
  const Vertex first_c = 2;
  const Vertex first_i = first_c + static_cast<Vertex>(big_part);
  std::vector<Edge> edges{{a, b}};
  std::vector<Vertex> cs;
  for (Vertex c = first_c; c < first_i; ++c) {
    edges.emplace_back(a, c);
    edges.emplace_back(b, c);
    cs.push_back(c);
  }
  std::uniform_int_distribution<int> shape(1, 7);
  std::uniform_int_distribution<std::size_t> pick_c(0, big_part - 1);
  std::vector<Vertex> indep;
  for (std::size_t i = 0; i < independent; ++i) {
    Vertex u = first_i + static_cast<Vertex>(i);
    indep.push_back(u);
    int mask = shape(rng);  // bits: a, b, some c
    if (mask & 1) edges.emplace_back(a, u);
    if (mask & 2) edges.emplace_back(b, u);
    if (mask & 4) edges.emplace_back(cs[pick_c(rng)], u);
  }
  SplitLikePartition p;
  p.parts = {VertexSet{a}, VertexSet{b}, VertexSet(cs)};
  p.independent = VertexSet(indep);
  return {Graph::build(static_cast<std::size_t>(first_i) + independent, edges), p};
}

std::pair<Graph, SplitLikePartition> gen_hub_ksplit(std::size_t k, std::size_t big_part, std::size_t independent,
                                                    double full_hub_prob, std::uint64_t seed) {
  if (k < 2 || big_part == 0) throw std::invalid_argument("gen_hub_ksplit: need k >= 2 and a nonempty big part");
  std::mt19937_64 rng(seed);
  const std::size_t hubs = k - 1;
  SplitLikePartition p;
  std::vector<Edge> edges;
  for (std::size_t h = 0; h < hubs; ++h) p.parts.push_back(VertexSet{static_cast<Vertex>(h)});
  std::vector<Vertex> big;
  for (std::size_t i = 0; i < big_part; ++i) big.push_back(static_cast<Vertex>(hubs + i));
  p.parts.emplace_back(big);
  for (std::size_t h = 0; h < hubs; ++h) {
    for (std::size_t h2 = h + 1; h2 < hubs; ++h2) edges.emplace_back(static_cast<Vertex>(h), static_cast<Vertex>(h2));
    for (Vertex c : big) edges.emplace_back(static_cast<Vertex>(h), c);
  }
  const Vertex first_i = static_cast<Vertex>(hubs + big_part);
  std::bernoulli_distribution full(full_hub_prob);
  std::bernoulli_distribution half(0.5);
  std::uniform_int_distribution<std::size_t> pick_c(0, big_part - 1);
  std::vector<Vertex> indep;
  for (std::size_t i = 0; i < independent; ++i) {
    Vertex u = first_i + static_cast<Vertex>(i);
    indep.push_back(u);
    if (big_part >= 2 && full(rng)) {
      for (std::size_t h = 0; h < hubs; ++h) edges.emplace_back(static_cast<Vertex>(h), u);
      std::vector<Vertex> chosen;
      for (Vertex c : big) {
        if (half(rng)) chosen.push_back(c);
      }
      while (chosen.size() < 2) {
        Vertex c = big[pick_c(rng)];
        if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
      }
      for (Vertex c : chosen) edges.emplace_back(c, u);
      continue;
    }
    bool attached = false;
    for (std::size_t h = 0; h < hubs; ++h) {
      if (half(rng)) {
        edges.emplace_back(static_cast<Vertex>(h), u);
        attached = true;
      }
    }
    if (half(rng) || !attached) edges.emplace_back(big[pick_c(rng)], u);
  }
  p.independent = VertexSet(indep);
  return {Graph::build(static_cast<std::size_t>(first_i) + independent, edges), p};
}

VertexSet random_subset(const VertexSet& pool, std::size_t min_size, std::size_t max_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  max_size = std::min(max_size, pool.size());
  min_size = std::min(min_size, max_size);
  std::size_t size = std::uniform_int_distribution<std::size_t>(min_size, max_size)(rng);
  std::vector<Vertex> ids = pool.ids();
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(size);
  return VertexSet(ids);
}

}  // namespace splitlike
