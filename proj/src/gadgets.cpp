#include "splitlike/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include "splitlike/errors.hpp"

namespace splitlike {

bool operator==(const ReductionArtifact& a, const ReductionArtifact& b) {
  return a.construction == b.construction && a.instance.graph == b.instance.graph &&
         a.instance.terminals == b.instance.terminals && a.instance.budget == b.instance.budget &&
         a.partition == b.partition && a.claimed_class == b.claimed_class && a.star_free_r == b.star_free_r &&
         a.source == b.source && a.names == b.names && a.notes == b.notes;
}

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

class Builder {
 public:
  Vertex add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<Vertex>(names_.size() - 1);
  }
  std::vector<Vertex> block(const std::string& prefix, std::size_t count) {
    std::vector<Vertex> ids;
    for (std::size_t i = 0; i < count; ++i) ids.push_back(add(prefix + "_" + std::to_string(i + 1)));
    return ids;
  }
  void join(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  void complete(const std::vector<Vertex>& xs, const std::vector<Vertex>& ys) {
    for (Vertex x : xs) {
      for (Vertex y : ys) join(x, y);
    }
  }
  void clique(const std::vector<Vertex>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) join(xs[i], xs[j]);
    }
  }
  // Set copy `sets[i]` joined to element copy `elems[x]` for every x in c_i.
  void membership(const ExactCoverInstance& src, const std::vector<Vertex>& sets, const std::vector<Vertex>& elems) {
    for (std::size_t i = 0; i < src.sets.size(); ++i) {
      for (int x : src.sets[i]) join(sets[i], elems[static_cast<std::size_t>(x)]);
    }
  }
  Graph graph() const { return Graph::build(names_.size(), edges_); }
  std::vector<std::string> take_names() { return std::move(names_); }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

void check_source(const ExactCoverInstance& src, const char* who, std::optional<std::size_t> set_size) {
  if (auto v = validate(src); !v) {
    throw PreconditionError(std::string(who) + ": invalid source (" + to_string(v.issue) + ", set " +
                            std::to_string(v.set_index) + ")");
  }
  if (set_size && src.set_size != *set_size) {
    throw PreconditionError(std::string(who) + ": needs sets of size " + std::to_string(*set_size));
  }
  if (src.sets.empty() || !covers_ground(src)) {
    throw PreconditionError(std::string(who) + ": every element must occur in some set, else the graph is disconnected");
  }
}

std::vector<Vertex> concat(std::initializer_list<std::vector<Vertex>> blocks) {
  std::vector<Vertex> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

ReductionArtifact finish(Builder& b, std::string construction, std::string claimed, const ExactCoverInstance& src,
                         VertexSet terminals, std::size_t budget, SplitLikePartition partition) {
  ReductionArtifact art;
  art.construction = std::move(construction);
  art.instance.graph = b.graph();
  art.instance.terminals = std::move(terminals);
  art.instance.budget = budget;
  art.partition = std::move(partition);
  art.claimed_class = std::move(claimed);
  art.source = src;
  art.names = b.take_names();
  return art;
}

SplitLikePartition multipartite(std::vector<std::vector<Vertex>> parts, std::vector<Vertex> independent) {
  SplitLikePartition p;
  p.kind = PartitionKind::CompleteMultipartite;
  for (auto& part : parts) p.parts.emplace_back(std::move(part));
  p.independent = VertexSet(std::move(independent));
  return p;
}

// Bipartite certificate: the colour class holding `anchor` is the single part.
SplitLikePartition bipartite_certificate(const Graph& g, Vertex anchor) {
  auto sides = recognize_bipartite(g);
  if (!sides) throw std::logic_error("construction is not bipartite");
  auto [first, second] = *sides;
  if (!first.contains(anchor)) std::swap(first, second);
  SplitLikePartition p;
  p.parts = {first};
  p.independent = second;
  return p;
}

}  // namespace

ReductionArtifact x3c3_to_k15free_bipartite(const ExactCoverInstance& src) {
  check_source(src, "x3c3_to_k15free_bipartite", 3);
  std::vector<std::size_t> occurrences(src.ground_size, 0);
  for (const auto& s : src.sets) {
    for (int x : s) ++occurrences[static_cast<std::size_t>(x)];
  }
  if (std::any_of(occurrences.begin(), occurrences.end(), [](std::size_t c) { return c > 3; })) {
    throw PreconditionError("x3c3_to_k15free_bipartite: an element occurs in more than three sets");
  }
  Builder b;
  auto a = b.block("u", src.ground_size);
  auto sets = b.block("v", src.sets.size());
  b.membership(src, sets, a);
  // Pair each level left to right under a new parent; an odd one out gets a
  // parent of its own. The set level is always processed once.
  std::vector<Vertex> tree;
  std::vector<Vertex> level = sets;
  do {
    std::vector<Vertex> next;
    for (std::size_t i = 0; i < level.size(); i += 2) {
      Vertex t = b.add("t_" + std::to_string(tree.size() + 1));
      tree.push_back(t);
      b.join(level[i], t);
      if (i + 1 < level.size()) b.join(level[i + 1], t);
      next.push_back(t);
    }
    level = std::move(next);
  } while (level.size() > 1);

  VertexSet terminals(concat({a, tree}));
  Builder copy = b;
  auto art = finish(b, "k15-bip", "K_{1,5}-free bipartite", src, terminals, src.q(),
                    bipartite_certificate(copy.graph(), sets.front()));
  art.star_free_r = 5;
  return art;
}

ReductionArtifact split_degree4_transform(const ReductionArtifact& src) {
  const Graph& g = src.instance.graph;
  const auto& terminals = src.instance.terminals;
  std::vector<Vertex> heavy;
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    if (g.degree(v) != 4) continue;
    if (terminals.contains(v)) {
      throw PreconditionError("split_degree4_transform: terminal " + std::to_string(v) + " has degree 4");
    }
    heavy.push_back(v);
  }
  std::vector<std::string> names = src.names;
  std::vector<Edge> edges;
  std::vector<char> is_heavy(g.size(), 0);
  for (Vertex v : heavy) is_heavy[idx(v)] = 1;
  for (auto [u, v] : g.edges()) {
    if (!is_heavy[idx(u)] && !is_heavy[idx(v)]) edges.emplace_back(u, v);
  }
  // Edges touching a split vertex are re-attached below; an edge between two
  // split vertices goes to whichever half each endpoint assigns it.
  std::vector<Vertex> second_half(g.size(), -1);
  auto n = static_cast<Vertex>(g.size());
  for (Vertex v : heavy) {
    const std::string base = names[idx(v)];
    names[idx(v)] = base + "/1";
    Vertex mid = n++;
    Vertex v2 = n++;
    names.push_back(base + "/mid");
    names.push_back(base + "/2");
    second_half[idx(v)] = v2;
    edges.emplace_back(v, mid);
    edges.emplace_back(mid, v2);
  }
  auto endpoint = [&](Vertex v, Vertex toward) {
    if (!is_heavy[idx(v)]) return v;
    auto nb = g.neighbors(v);
    return (toward == nb[0] || toward == nb[1]) ? v : second_half[idx(v)];
  };
  for (auto [u, v] : g.edges()) {
    if (is_heavy[idx(u)] || is_heavy[idx(v)]) edges.emplace_back(endpoint(u, v), endpoint(v, u));
  }

  ReductionArtifact art;
  art.construction = src.construction == "k15-bip" ? "k14-bip" : src.construction + "+split4";
  art.instance.graph = Graph::build(static_cast<std::size_t>(n), edges);
  art.instance.terminals = terminals;
  art.instance.budget = 3 * src.budget();
  art.claimed_class = "K_{1,4}-free bipartite";
  art.star_free_r = 4;
  art.source = src.source;
  art.names = std::move(names);
  art.notes = src.notes;
  art.notes.push_back("degree-4 split of " + std::to_string(heavy.size()) + " vertices, k' = 3k");
  Vertex anchor = src.partition.parts.empty() || src.partition.parts[0].empty() ? 0 : src.partition.parts[0].front();
  art.partition = bipartite_certificate(art.instance.graph, anchor);
  return art;
}

ReductionArtifact xlc_to_bisplit(const ExactCoverInstance& src) {
  check_source(src, "xlc_to_bisplit", std::nullopt);
  Builder b;
  auto a = b.block("v", src.sets.size());
  auto bb = b.block("v'", src.sets.size());
  auto i1 = b.block("u", src.ground_size);
  auto i2 = b.block("u'", src.ground_size);
  b.complete(a, bb);
  b.membership(src, a, i1);
  b.membership(src, bb, i2);
  auto art = finish(b, "bisplit", "bisplit", src, VertexSet(concat({i1, i2})), 2 * src.q(),
                    multipartite({a, bb}, concat({i1, i2})));
  art.star_free_r = static_cast<int>(src.sets.size() + src.set_size + 1);
  return art;
}

ReductionArtifact x3c_to_trisplit(const ExactCoverInstance& src) {
  check_source(src, "x3c_to_trisplit", 3);
  Builder b;
  auto a = b.block("v", src.sets.size());
  auto bb = b.block("v'", src.sets.size());
  auto d = b.block("v''", src.sets.size());
  auto i1 = b.block("u", src.ground_size);
  auto i2 = b.block("u'", src.ground_size);
  auto i3 = b.block("u''", src.ground_size);
  b.complete(a, bb);
  b.complete(a, d);
  b.complete(bb, d);
  b.membership(src, a, i1);
  b.membership(src, bb, i2);
  b.membership(src, d, i3);
  auto art = finish(b, "trisplit", "trisplit", src, VertexSet(concat({i1, i2, i3})), src.ground_size,
                    multipartite({a, bb, d}, concat({i1, i2, i3})));
  art.notes.push_back("budget k = |X| = " + std::to_string(src.ground_size) + "; the alternative reading |X|/3 = " +
                      std::to_string(src.q()) + " is measured, not assumed");
  return art;
}

ReductionArtifact x3c_to_bisplit_diam3(const ExactCoverInstance& src) {
  check_source(src, "x3c_to_bisplit_diam3", 3);
  Builder b;
  auto a = b.block("v", src.sets.size());
  auto bb = b.block("v'", src.sets.size());
  auto i = b.block("u", src.ground_size);
  b.complete(a, bb);
  b.membership(src, a, i);
  b.membership(src, bb, i);
  return finish(b, "bisplit-d3", "bisplit, diameter 3", src, VertexSet(i), src.q(), multipartite({a, bb}, i));
}

ReductionArtifact x3c_to_trisplit_diam3(const ExactCoverInstance& src) {
  check_source(src, "x3c_to_trisplit_diam3", 3);
  Builder b;
  auto a = b.block("v", src.sets.size());
  auto bb = b.block("v'", src.sets.size());
  auto d = b.block("v''", src.sets.size());
  auto i = b.block("u", src.ground_size);
  b.complete(a, bb);
  b.complete(a, d);
  b.complete(bb, d);
  b.membership(src, a, i);
  b.membership(src, bb, i);
  b.membership(src, d, i);
  auto art = finish(b, "trisplit-d3", "trisplit, diameter 3", src, VertexSet(i), src.q(), multipartite({a, bb, d}, i));
  art.notes.push_back("wiring chosen: all three set copies attached to the single element set");
  return art;
}

ReductionArtifact x3c_to_star_convex_bipartite(const ExactCoverInstance& src) {
  check_source(src, "x3c_to_star_convex_bipartite", 3);
  Builder b;
  auto a = b.block("v", src.sets.size());
  Vertex apex = b.add("v");
  auto elems = b.block("u", src.ground_size);
  for (Vertex x : a) b.join(apex, x);
  b.membership(src, a, elems);
  std::vector<Vertex> r = elems;
  r.push_back(apex);
  return finish(b, "star-bip", "star-convex bipartite", src, VertexSet(r), src.q(), multipartite({a}, r));
}

ReductionArtifact x3c_to_star_convex_bisplit_indep(const ExactCoverInstance& src) {
  check_source(src, "x3c_to_star_convex_bisplit_indep", 3);
  Builder b;
  auto a = b.block("v", src.sets.size());
  auto bb = b.block("v'", src.sets.size());
  Vertex apex = b.add("u");
  auto i1 = b.block("u", src.ground_size);
  auto i2 = b.block("u'", src.ground_size);
  b.complete(a, bb);
  for (Vertex x : concat({a, bb})) b.join(apex, x);
  b.membership(src, a, i1);
  b.membership(src, bb, i2);
  std::vector<Vertex> r = concat({{apex}, i1, i2});
  auto art = finish(b, "star-bisplit-i", "star-convex bisplit (independent side)", src, VertexSet(r), 2 * src.q(),
                    multipartite({a, bb}, r));
  art.notes.push_back("R = I' ∪ I'' ∪ {u}");
  return art;
}

CliqueArtifact tdm_to_k14free_chordal(const TripleSystem& src) {
  if (!validate(src)) throw PreconditionError("tdm_to_k14free_chordal: triple coordinate out of range");
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<char> used(src.n, 0);
    for (const auto& t : src.triples) used[static_cast<std::size_t>(t[c])] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) {
      throw PreconditionError("tdm_to_k14free_chordal: every element must occur in some triple");
    }
  }
  Builder b;
  struct Block {
    Vertex a, b, c, x, y, z1, z2, z3;
  };
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < src.triples.size(); ++j) {
    const std::string s = "_" + std::to_string(j + 1);
    Block blk{b.add("a" + s), b.add("b" + s), b.add("c" + s), b.add("x" + s),
              b.add("y" + s), b.add("z1" + s), b.add("z2" + s), b.add("z3" + s)};
    blocks.push_back(blk);
  }
  auto p = b.block("p", src.n);
  auto q = b.block("q", src.n);
  auto r = b.block("r", src.n);

  CliqueArtifact art;
  auto add_clique = [&](std::vector<Vertex> xs) {
    b.clique(xs);
    art.cliques.emplace_back(std::move(xs));
  };
  std::vector<Vertex> k;
  for (const auto& blk : blocks) k.insert(k.end(), {blk.a, blk.b, blk.c, blk.x});
  add_clique(k);
  for (const auto& blk : blocks) {
    add_clique({blk.a, blk.b, blk.x, blk.y});
    add_clique({blk.a, blk.y, blk.z1});
    add_clique({blk.b, blk.y, blk.z2});
    add_clique({blk.c, blk.x, blk.z3});
  }
  for (std::size_t i = 0; i < src.n; ++i) {
    std::vector<Vertex> cp{p[i]}, cq{q[i]}, cr{r[i]};
    for (std::size_t j = 0; j < src.triples.size(); ++j) {
      const auto& t = src.triples[j];
      if (static_cast<std::size_t>(t[0]) == i) cp.push_back(blocks[j].a);
      if (static_cast<std::size_t>(t[1]) == i) cq.push_back(blocks[j].b);
      if (static_cast<std::size_t>(t[2]) == i) cr.push_back(blocks[j].c);
    }
    add_clique(cp);
    add_clique(cq);
    add_clique(cr);
  }
  art.graph = b.graph();
  art.claimed_class = "K_{1,4}-free chordal";
  art.source = src;
  art.names = b.take_names();
  return art;
}

ReductionArtifact build_artifact(const std::string& target, const ExactCoverInstance& src) {
  if (target == "k15-bip") return x3c3_to_k15free_bipartite(src);
  if (target == "k14-bip") return split_degree4_transform(x3c3_to_k15free_bipartite(src));
  if (target == "bisplit") return xlc_to_bisplit(src);
  if (target == "trisplit") return x3c_to_trisplit(src);
  if (target == "bisplit-d3") return x3c_to_bisplit_diam3(src);
  if (target == "trisplit-d3") return x3c_to_trisplit_diam3(src);
  if (target == "star-bip") return x3c_to_star_convex_bipartite(src);
  if (target == "star-bisplit-i") return x3c_to_star_convex_bisplit_indep(src);
  throw std::invalid_argument("unknown construction target '" + target + "'");
}

}  // namespace splitlike
