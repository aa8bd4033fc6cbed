#include <algorithm>
#include <stdexcept>
#include <string>

#include "splitlike/errors.hpp"
#include "splitlike/poly.hpp"

namespace splitlike {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

PolyResult result(const SteinerInstance& inst, VertexSet s, PolyAlgorithm algo, std::string certificate) {
  return {make_solution(inst.graph, inst.terminals, std::move(s)), algo, std::move(certificate)};
}

bool feasible(const SteinerInstance& inst, const VertexSet& s) {
  return is_connected_on(inst.graph, inst.terminals.united(s));
}

void require_terminals_independent(const SteinerInstance& inst, const SplitLikePartition& p, const char* who) {
  if (!inst.terminals.subset_of(p.independent)) {
    throw PreconditionError(std::string(who) + ": terminals must lie in the independent set");
  }
}

// Unique neighbours of degree-one terminals.
VertexSet pendant_neighbors(const SteinerInstance& inst) {
  std::vector<Vertex> s;
  for (Vertex t : inst.terminals) {
    if (inst.graph.degree(t) == 1) {
      Vertex w = inst.graph.neighbors(t)[0];
      if (!inst.terminals.contains(w)) s.push_back(w);
    }
  }
  return VertexSet(std::move(s));
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v + 1);
  return out + "}";
}

struct TrisplitRoles {
  Vertex a;
  Vertex b;
  std::size_t big;
};

TrisplitRoles trisplit_roles(const SplitLikePartition& p) {
  std::size_t big = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    if (p.parts[i].size() > 1) {
      big = i;
      break;
    }
  }
  std::vector<Vertex> singles;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != big) singles.push_back(p.parts[i].front());
  }
  return {singles[0], singles[1], big};
}

std::vector<VertexSet> four_candidates(const VertexSet& s0, Vertex a, Vertex b) {
  VertexSet with_a = s0, with_b = s0;
  with_a.insert(a);
  with_b.insert(b);
  VertexSet with_ab = with_a;
  with_ab.insert(b);
  return {s0, with_a, with_b, with_ab};
}

}  // namespace

std::string to_string(PolyAlgorithm a) {
  switch (a) {
    case PolyAlgorithm::Hub: return "hub";
    case PolyAlgorithm::ClawFreeBipartite: return "claw-free-bipartite";
    case PolyAlgorithm::ChordalTrisplit: return "chordal-trisplit";
    case PolyAlgorithm::ChordalKSplit: return "chordal-ksplit";
    case PolyAlgorithm::StarConvexBisplit: return "star-convex-bisplit";
    case PolyAlgorithm::FiniteBisplit: return "finite-bisplit";
    case PolyAlgorithm::FiniteTrisplit: return "finite-trisplit";
    case PolyAlgorithm::Exact: return "exact";
  }
  return "?";
}

PolyResult solve_claw_free_bipartite(const SteinerInstance& inst) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  const auto shape = classify_claw_free_bipartite(g);
  if (shape == ClawFreeBipartiteShape::NotInClass) {
    throw PreconditionError("solve_claw_free_bipartite: graph is neither a path nor an even cycle");
  }
  const std::string cert = to_string(shape);
  if (is_connected_on(g, inst.terminals)) return result(inst, {}, PolyAlgorithm::ClawFreeBipartite, cert);

  const std::size_t n = g.size();
  std::vector<Vertex> order;
  Vertex start = 0;
  if (shape == ClawFreeBipartiteShape::Path) {
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (g.degree(v) == 1) {
        start = v;
        break;
      }
    }
  }
  Vertex prev = -1;
  for (Vertex cur = start; order.size() < n;) {
    order.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }

  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (inst.terminals.contains(order[i])) positions.push_back(i);
  }
  std::vector<Vertex> s;
  if (shape == ClawFreeBipartiteShape::Path) {
    for (std::size_t i = positions.front() + 1; i < positions.back(); ++i) {
      if (!inst.terminals.contains(order[i])) s.push_back(order[i]);
    }
    return result(inst, VertexSet(std::move(s)), PolyAlgorithm::ClawFreeBipartite, cert);
  }
  // Even cycle: keep everything except the interior of one longest terminal-free arc.
  std::size_t best = 0;
  std::size_t best_len = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::size_t from = positions[i];
    std::size_t to = positions[(i + 1) % positions.size()];
    std::size_t len = (to + n - from - 1) % n;
    bool better = len > best_len || (len == best_len && order[from] < order[positions[best]]);
    if (i == 0 || better) {
      best = i;
      best_len = len;
    }
  }
  std::vector<char> dropped(n, 0);
  for (std::size_t j = 1; j <= best_len; ++j) dropped[idx(order[(positions[best] + j) % n])] = 1;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
    if (!dropped[idx(v)] && !inst.terminals.contains(v)) s.push_back(v);
  }
  return result(inst, VertexSet(std::move(s)), PolyAlgorithm::ClawFreeBipartite, cert);
}

std::optional<PolyResult> solve_via_hub(const SteinerInstance& inst) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  if (is_connected_on(g, inst.terminals)) return result(inst, {}, PolyAlgorithm::Hub, "terminals connected");
  std::vector<std::size_t> hits(g.size(), 0);
  for (Vertex t : inst.terminals) {
    for (Vertex w : g.neighbors(t)) ++hits[idx(w)];
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    if (hits[idx(v)] == inst.terminals.size() && !inst.terminals.contains(v)) {
      return result(inst, VertexSet{v}, PolyAlgorithm::Hub, "hub " + std::to_string(v + 1));
    }
  }
  return std::nullopt;
}

VertexSet chordal_trisplit_four_candidates(const SteinerInstance& inst, const SplitLikePartition& p) {
  validate_instance(inst);
  if (!chordal_trisplit_check(inst.graph, p)) {
    throw PreconditionError("chordal trisplit solver: certificate fails the two-singleton shape");
  }
  require_terminals_independent(inst, p, "chordal trisplit solver");
  if (is_connected_on(inst.graph, inst.terminals)) return {};
  const auto roles = trisplit_roles(p);
  for (const auto& s : four_candidates(pendant_neighbors(inst), roles.a, roles.b)) {
    if (feasible(inst, s)) return s;
  }
  throw std::logic_error("chordal trisplit solver: no candidate connects the terminals");
}

PolyResult solve_chordal_trisplit(const SteinerInstance& inst, const SplitLikePartition& p) {
  validate_instance(inst);
  if (!chordal_trisplit_check(inst.graph, p)) {
    throw PreconditionError("chordal trisplit solver: certificate fails the two-singleton shape");
  }
  require_terminals_independent(inst, p, "chordal trisplit solver");
  const auto roles = trisplit_roles(p);
  const std::string cert = "a=" + std::to_string(roles.a + 1) + " b=" + std::to_string(roles.b + 1);
  if (is_connected_on(inst.graph, inst.terminals)) return result(inst, {}, PolyAlgorithm::ChordalTrisplit, cert);

  const VertexSet s0 = pendant_neighbors(inst);
  std::vector<VertexSet> candidates = four_candidates(s0, roles.a, roles.b);
  if (s0.empty()) {
    // Without pendant terminals one triclique vertex may already see every terminal.
    std::vector<std::size_t> hits(inst.graph.size(), 0);
    for (Vertex t : inst.terminals) {
      for (Vertex w : inst.graph.neighbors(t)) ++hits[idx(w)];
    }
    const VertexSet k_side = p.k_side();
    for (Vertex v : k_side) {
      if (hits[idx(v)] == inst.terminals.size()) {
        candidates.push_back(VertexSet{v});
        break;
      }
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const VertexSet& x, const VertexSet& y) { return x.size() < y.size(); });
  for (auto& s : candidates) {
    if (feasible(inst, s)) return result(inst, std::move(s), PolyAlgorithm::ChordalTrisplit, cert);
  }
  throw std::logic_error("chordal trisplit solver: no candidate connects the terminals");
}

PolyResult solve_chordal_ksplit(const SteinerInstance& inst, const SplitLikePartition& p, const KSplitOptions& opts) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  if (p.kind != PartitionKind::CompleteMultipartite || p.k() < 2) {
    throw PreconditionError("chordal k-split solver: needs a complete multipartite side with k >= 2");
  }
  if (!verify_partition(g, p)) throw PreconditionError("chordal k-split solver: invalid partition");
  if (!is_chordal(g).chordal) throw PreconditionError("chordal k-split solver: graph is not chordal");
  std::size_t big = p.k() - 1;
  std::size_t large_parts = 0;
  for (std::size_t i = 0; i < p.k(); ++i) {
    if (p.parts[i].size() > 1) {
      if (large_parts++ == 0) big = i;
    }
  }
  if (large_parts > 1) throw PreconditionError("chordal k-split solver: more than one part has two or more vertices");
  require_terminals_independent(inst, p, "chordal k-split solver");

  std::vector<Vertex> hubs;
  for (std::size_t i = 0; i < p.k(); ++i) {
    if (i != big) hubs.push_back(p.parts[i].front());
  }
  if (hubs.size() > opts.max_hubs) {
    throw CapExceeded("chordal k-split solver: " + std::to_string(hubs.size()) + " hubs exceeds cap");
  }
  const VertexSet& m = p.parts[big];
  std::string cert = "hubs " + describe(VertexSet(hubs)) + " big part " + describe(m);
  if (is_connected_on(g, inst.terminals)) return result(inst, {}, PolyAlgorithm::ChordalKSplit, cert);

  // Per terminal: which hubs it sees, and how many big-part neighbours (with the last one).
  std::vector<int> hub_index(g.size(), -1);
  for (std::size_t h = 0; h < hubs.size(); ++h) hub_index[idx(hubs[h])] = static_cast<int>(h);
  std::vector<std::uint64_t> hub_mask;
  std::vector<std::size_t> big_count;
  std::vector<Vertex> big_neighbor;
  for (Vertex t : inst.terminals) {
    std::uint64_t mask = 0;
    std::size_t count = 0;
    Vertex last = -1;
    for (Vertex w : g.neighbors(t)) {
      if (hub_index[idx(w)] >= 0) mask |= std::uint64_t{1} << hub_index[idx(w)];
      else if (m.contains(w)) {
        ++count;
        last = w;
      }
    }
    hub_mask.push_back(mask);
    big_count.push_back(count);
    big_neighbor.push_back(last);
  }

  std::optional<VertexSet> best;
  auto offer = [&](VertexSet s) {
    if (!best || s.size() < best->size()) best = std::move(s);
  };

  // Some hub chosen: the chosen K vertices are connected through it, so only
  // terminals missing every chosen hub need a big-part neighbour, and in a
  // chordal graph those have exactly one.
  for (std::uint64_t y = 1; y < (std::uint64_t{1} << hubs.size()); ++y) {
    std::vector<Vertex> s;
    for (std::size_t h = 0; h < hubs.size(); ++h) {
      if (y >> h & 1) s.push_back(hubs[h]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < hub_mask.size() && ok; ++i) {
      if (hub_mask[i] & y) continue;
      if (big_count[i] == 1) s.push_back(big_neighbor[i]);
      else ok = false;
    }
    if (ok) offer(VertexSet(std::move(s)));
  }

  // No hub: g[R ∪ M] is a forest; take the minimal subtree spanning R.
  {
    std::vector<char> inside(g.size(), 0);
    for (Vertex t : inst.terminals) inside[idx(t)] = 1;
    for (Vertex v : m) inside[idx(v)] = 1;
    std::vector<std::size_t> deg(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!inside[v]) continue;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) deg[v] += inside[idx(w)] ? 1 : 0;
    }
    std::vector<Vertex> leaves;
    for (Vertex v : m) {
      if (deg[idx(v)] <= 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
      Vertex v = leaves.back();
      leaves.pop_back();
      if (!inside[idx(v)]) continue;
      inside[idx(v)] = 0;
      for (Vertex w : g.neighbors(v)) {
        if (inside[idx(w)] && --deg[idx(w)] <= 1 && m.contains(w)) leaves.push_back(w);
      }
    }
    std::vector<Vertex> z;
    for (Vertex v : m) {
      if (inside[idx(v)]) z.push_back(v);
    }
    VertexSet zs(std::move(z));
    if (feasible(inst, zs)) offer(std::move(zs));
  }

  if (!best || !feasible(inst, *best)) throw std::logic_error("chordal k-split solver: no feasible candidate");
  return result(inst, std::move(*best), PolyAlgorithm::ChordalKSplit, cert);
}

PolyResult solve_star_convex_bisplit_biclique(const SteinerInstance& inst, const SplitLikePartition& p, Vertex x) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  if (p.kind != PartitionKind::CompleteMultipartite || p.k() != 2 || !verify_partition(g, p)) {
    throw PreconditionError("star-convex bisplit solver: needs a valid bisplit partition");
  }
  if (p.part_of(x) < 0) throw PreconditionError("star-convex bisplit solver: centre must be a biclique vertex");
  for (Vertex y : p.independent) {
    if (g.degree(y) != 1 && !g.has_edge(x, y)) {
      throw PreconditionError("star-convex bisplit solver: " + std::to_string(x + 1) + " is not a star centre");
    }
  }
  require_terminals_independent(inst, p, "star-convex bisplit solver");
  const std::string cert = "centre " + std::to_string(x + 1);
  if (is_connected_on(g, inst.terminals)) return result(inst, {}, PolyAlgorithm::StarConvexBisplit, cert);

  const VertexSet base = pendant_neighbors(inst);
  if (feasible(inst, base)) return result(inst, base, PolyAlgorithm::StarConvexBisplit, cert);
  std::vector<Vertex> extra;
  for (Vertex v : p.k_side()) {
    if (!base.contains(v)) extra.push_back(v);
  }
  for (Vertex v : extra) {
    VertexSet s = base;
    s.insert(v);
    if (feasible(inst, s)) return result(inst, std::move(s), PolyAlgorithm::StarConvexBisplit, cert);
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j) {
      VertexSet s = base;
      s.insert(extra[i]);
      s.insert(extra[j]);
      if (feasible(inst, s)) return result(inst, std::move(s), PolyAlgorithm::StarConvexBisplit, cert);
    }
  }
  throw std::logic_error("star-convex bisplit solver: no set with two extra vertices connects the terminals");
}

namespace {

PolyResult solve_finite(const SteinerInstance& inst, const SplitLikePartition& p, int r, std::size_t k,
                        PolyAlgorithm algo) {
  validate_instance(inst);
  const Graph& g = inst.graph;
  if (p.kind != PartitionKind::CompleteMultipartite || p.k() != k || !verify_partition(g, p)) {
    throw PreconditionError("finite-class solver: certificate is not a valid " + std::to_string(k) + "-part partition");
  }
  if (r < 1 || !is_k1r_free(g, r)) {
    throw PreconditionError("finite-class solver: graph contains an induced K_{1," + std::to_string(r) + "}");
  }
  const std::size_t bound = k * static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1);
  if (g.size() > bound) {
    throw PreconditionError("finite-class solver: " + std::to_string(g.size()) + " vertices exceed the bound " +
                            std::to_string(bound) + " for r = " + std::to_string(r));
  }
  auto sol = solve_exact(inst, ExactOptions{g.size()});
  return {std::move(sol), algo, "K_{1," + std::to_string(r) + "}-free, n <= " + std::to_string(bound)};
}

bool at_most_one_large_part(const SplitLikePartition& p) {
  return std::count_if(p.parts.begin(), p.parts.end(), [](const VertexSet& s) { return s.size() > 1; }) <= 1;
}

}  // namespace

PolyResult solve_k1rfree_bisplit(const SteinerInstance& inst, const SplitLikePartition& p, int r) {
  return solve_finite(inst, p, r, 2, PolyAlgorithm::FiniteBisplit);
}

PolyResult solve_k1rfree_trisplit(const SteinerInstance& inst, const SplitLikePartition& p, int r) {
  return solve_finite(inst, p, r, 3, PolyAlgorithm::FiniteTrisplit);
}

std::optional<PolyResult> dispatch(const SteinerInstance& inst, const ClassReport& report, const DispatchOptions& opts) {
  if (auto r = solve_via_hub(inst)) return r;
  if (report.claw_shape && *report.claw_shape != ClawFreeBipartiteShape::NotInClass) {
    return solve_claw_free_bipartite(inst);
  }
  if (report.chordal) {
    if (report.trisplit && inst.terminals.subset_of(report.trisplit->independent) &&
        chordal_trisplit_check(inst.graph, *report.trisplit)) {
      return solve_chordal_trisplit(inst, *report.trisplit);
    }
    for (const auto& cert : {report.bisplit, report.trisplit}) {
      if (cert && at_most_one_large_part(*cert) && cert->k() - 1 <= opts.ksplit.max_hubs &&
          inst.terminals.subset_of(cert->independent)) {
        return solve_chordal_ksplit(inst, *cert, opts.ksplit);
      }
    }
  }
  if (report.bisplit && report.star_center_biclique && inst.terminals.subset_of(report.bisplit->independent)) {
    return solve_star_convex_bisplit_biclique(inst, *report.bisplit, *report.star_center_biclique);
  }
  if (report.max_induced_star) {
    const int r = *report.max_induced_star + 1;
    const auto n = inst.graph.size();
    const auto rr = static_cast<std::size_t>(r) * static_cast<std::size_t>(std::max(r - 1, 0));
    if (r <= opts.finite_r) {
      if (report.bisplit && n <= 2 * rr) return solve_k1rfree_bisplit(inst, *report.bisplit, r);
      if (report.trisplit && n <= 3 * rr) return solve_k1rfree_trisplit(inst, *report.trisplit, r);
    }
  }
  return std::nullopt;
}

}  // namespace splitlike
