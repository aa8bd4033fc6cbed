#include "splitlike/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "splitlike/errors.hpp"
#include "splitlike/generators.hpp"
#include "splitlike/poly.hpp"

namespace splitlike {

using nlohmann::json;

CampaignConfig CampaignConfig::empty() {
  CampaignConfig cfg;
  cfg.equivalence_sources = 0;
  cfg.exhaustive_slice = false;
  cfg.lemma_instances = 0;
  cfg.fuzz_instances = 0;
  return cfg;
}

namespace {

constexpr std::size_t kKeptCounterexamples = 5;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::string_view check, std::uint64_t i) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : check) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return splitmix(splitmix(seed ^ h) + i);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void keep_counterexample(std::vector<json>& kept, json ce) {
  kept.push_back(std::move(ce));
  std::sort(kept.begin(), kept.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.size() > kKeptCounterexamples) kept.resize(kKeptCounterexamples);
}

// A unit of work. `data` is either a concrete case or {"recipe": seed},
// materialized by the worker.
struct Task {
  std::string check;
  bool asserted = true;
  json data;
};

struct Outcome {
  bool pass = true;
  std::map<std::string, long long> tallies;
};

// ---------------------------------------------------------------- sources

std::vector<ExactCoverInstance> exhaustive_sources(std::optional<std::size_t> cap) {
  std::vector<ExactCoverInstance> out;
  out.push_back({3, 3, {{0, 1, 2}}, cap});
  std::vector<std::vector<int>> triples;
  for (int a = 0; a < 6; ++a) {
    for (int b = a + 1; b < 6; ++b) {
      for (int c = b + 1; c < 6; ++c) triples.push_back({a, b, c});
    }
  }
  const std::size_t t = triples.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      ExactCoverInstance pair{6, 3, {triples[i], triples[j]}, cap};
      if (covers_ground(pair)) out.push_back(pair);
      for (std::size_t k = j + 1; k < t; ++k) {
        ExactCoverInstance three{6, 3, {triples[i], triples[j], triples[k]}, cap};
        if (covers_ground(three)) out.push_back(three);
      }
    }
  }
  return out;
}

std::vector<ExactCoverInstance> random_sources(const CampaignConfig& cfg, std::size_t set_size,
                                               std::optional<std::size_t> cap, std::string_view stream) {
  std::vector<ExactCoverInstance> out;
  for (std::size_t i = 0; i < cfg.equivalence_sources; ++i) {
    CoverSourceParams params;
    params.set_size = set_size;
    params.max_ground = set_size == 3 ? 9 : 8;
    params.max_sets = 6;
    params.occurrence_cap = cap;
    params.plant = cfg.planted_only || i % 2 == 0;
    out.push_back(gen_cover_source(params, case_seed(cfg.seed, stream, i)));
  }
  return out;
}

std::vector<ExactCoverInstance> sources(const CampaignConfig& cfg, std::size_t set_size, std::optional<std::size_t> cap) {
  std::vector<ExactCoverInstance> out;
  if (cfg.exhaustive_slice) {
    if (set_size == 3) out = exhaustive_sources(cap);
    else out.push_back({set_size, set_size, {[&] {
                          std::vector<int> s(set_size);
                          for (std::size_t i = 0; i < set_size; ++i) s[i] = static_cast<int>(i);
                          return s;
                        }()},
                        cap});
  }
  std::string stream = "sources/" + std::to_string(set_size) + (cap ? "/cap" : "");
  auto random = random_sources(cfg, set_size, cap, stream);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

TripleSystem random_triple_system(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TripleSystem ts;
  ts.n = uniform(rng, 1, 3);
  const std::size_t m = uniform(rng, ts.n, 6);
  std::vector<int> q(ts.n), r(ts.n);
  for (std::size_t i = 0; i < ts.n; ++i) q[i] = r[i] = static_cast<int>(i);
  std::shuffle(q.begin(), q.end(), rng);
  std::shuffle(r.begin(), r.end(), rng);
  for (std::size_t i = 0; i < ts.n; ++i) ts.triples.push_back({static_cast<int>(i), q[i], r[i]});
  while (ts.triples.size() < m) {
    auto pick = [&] { return static_cast<int>(uniform(rng, 0, ts.n - 1)); };
    ts.triples.push_back({pick(), pick(), pick()});
  }
  std::shuffle(ts.triples.begin(), ts.triples.end(), rng);
  return ts;
}

json triples_to_json(const TripleSystem& ts) { return json::parse(write_triples_json(ts)); }

// ------------------------------------------------------------ lemma cases

std::string stp_with_partition(const Graph& g, const SplitLikePartition& p, VertexSet terminals = {}) {
  StpDocument doc;
  doc.instance.graph = g;
  doc.instance.terminals = std::move(terminals);
  doc.partition = p;
  return write_stp(doc);
}

std::vector<std::size_t> random_parts(std::mt19937_64& rng, std::size_t count, std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> parts;
  for (std::size_t i = 0; i < count; ++i) parts.push_back(uniform(rng, lo, hi));
  return parts;
}

json lemma_case(const std::string& lemma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  SplitLikeParams params;
  params.attach_prob = p;
  std::pair<Graph, SplitLikePartition> gp;
  if (lemma == "split-diameter") {
    params.kind = PartitionKind::Clique;
    params.part_sizes = {uniform(rng, 1, 6)};
    params.independent_size = uniform(rng, 0, 10);
    gp = gen_random_split_like(params, rng());
  } else if (lemma == "bisplit-diameter" || lemma == "pro5-iff") {
    params.part_sizes = random_parts(rng, 2, 1, 5);
    params.independent_size = uniform(rng, 0, 16 - params.part_sizes[0] - params.part_sizes[1]);
    gp = gen_random_split_like(params, rng());
  } else if (lemma == "trisplit-diameter") {
    params.part_sizes = random_parts(rng, 3, 1, 4);
    params.independent_size = uniform(rng, 0, 8);
    gp = gen_random_split_like(params, rng());
  } else if (lemma == "a3-iff") {
    switch (uniform(rng, 0, 2)) {
      case 0: gp = gen_chordal_trisplit(uniform(rng, 1, 6), uniform(rng, 0, 8), rng()); break;
      case 1: gp = gen_hub_ksplit(3, uniform(rng, 1, 6), uniform(rng, 0, 8), 0.3, rng()); break;
      default:
        params.part_sizes = random_parts(rng, 3, 1, 3);
        params.independent_size = uniform(rng, 0, 7);
        gp = gen_random_split_like(params, rng());
    }
  } else if (lemma == "finite-bisplit" || lemma == "finite-trisplit") {
    const bool bi = lemma == "finite-bisplit";
    const std::size_t k = bi ? 2 : 3;
    const std::size_t n = bi ? uniform(rng, 13, 20) : uniform(rng, 19, 24);
    params.part_sizes = random_parts(rng, k, 1, 4);
    std::size_t k_count = 0;
    for (std::size_t s : params.part_sizes) k_count += s;
    params.independent_size = n - k_count;
    gp = gen_random_split_like(params, rng());
  } else {
    throw std::invalid_argument("unknown lemma check '" + lemma + "'");
  }
  return {{"stp", stp_with_partition(gp.first, gp.second)}};
}

// ------------------------------------------------------------- fuzz cases

VertexSet all_vertices(std::size_t n) {
  std::vector<Vertex> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(ids));
}

json fuzz_doc(const std::string& solver, const Graph& g, const VertexSet& terminals,
              const std::optional<SplitLikePartition>& p) {
  StpDocument doc;
  doc.instance.graph = g;
  doc.instance.terminals = terminals;
  doc.partition = p;
  return {{"solver", solver}, {"stp", write_stp(doc)}};
}

json fuzz_case(const std::string& solver, std::uint64_t seed, std::size_t max_n) {
  max_n = std::max<std::size_t>(max_n, 6);
  std::mt19937_64 rng(seed);
  if (solver == "claw") {
    std::size_t n = uniform(rng, 3, max_n);
    Graph g;
    if (n >= 4 && uniform(rng, 0, 1) == 1) g = gen_cycle(n - n % 2);
    else g = gen_path(n);
    return fuzz_doc(solver, g, random_subset(all_vertices(g.size()), 1, g.size(), rng()), std::nullopt);
  }
  if (solver == "hub") {
    std::size_t n = uniform(rng, 2, max_n);
    Graph base = gen_random_connected(n - 1, std::uniform_real_distribution<double>(0.05, 0.5)(rng), rng());
    std::vector<Edge> edges = base.edges();
    for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(n - 1));
    Graph g = Graph::build(n, edges);
    return fuzz_doc(solver, g, random_subset(all_vertices(n), 1, n, rng()), std::nullopt);
  }
  if (solver == "chordal-trisplit" || solver == "chordal-trisplit-four") {
    std::size_t big = uniform(rng, 1, 6);
    std::size_t indep = uniform(rng, 1, max_n - 2 - big);
    auto [g, p] = gen_chordal_trisplit(big, indep, rng());
    return fuzz_doc(solver, g, random_subset(p.independent, 1, p.independent.size(), rng()), p);
  }
  if (solver == "chordal-ksplit") {
    for (;;) {
      std::size_t k = uniform(rng, 2, 4);
      std::size_t big = uniform(rng, 1, 5);
      std::size_t indep = uniform(rng, 1, max_n - (k - 1) - big);
      auto [g, p] = gen_hub_ksplit(k, big, indep, 0.3, rng());
      if (!is_chordal(g).chordal) continue;
      return fuzz_doc(solver, g, random_subset(p.independent, 1, p.independent.size(), rng()), p);
    }
  }
  if (solver == "star-bisplit") {
    std::size_t a = uniform(rng, 1, 4), b = uniform(rng, 1, 4);
    std::size_t indep = uniform(rng, 1, max_n - a - b);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
    }
    const Vertex k_count = static_cast<Vertex>(a + b);
    const Vertex center = static_cast<Vertex>(uniform(rng, 0, a + b - 1));
    std::bernoulli_distribution pendant(0.35), extra(0.4);
    std::vector<Vertex> ind;
    for (std::size_t i = 0; i < indep; ++i) {
      Vertex u = k_count + static_cast<Vertex>(i);
      ind.push_back(u);
      if (pendant(rng)) {
        edges.emplace_back(static_cast<Vertex>(uniform(rng, 0, a + b - 1)), u);
        continue;
      }
      edges.emplace_back(center, u);
      for (Vertex v = 0; v < k_count; ++v) {
        if (v != center && extra(rng)) edges.emplace_back(v, u);
      }
    }
    std::vector<Vertex> pa, pb;
    for (std::size_t i = 0; i < a; ++i) pa.push_back(static_cast<Vertex>(i));
    for (std::size_t j = 0; j < b; ++j) pb.push_back(static_cast<Vertex>(a + j));
    SplitLikePartition p;
    p.parts = {VertexSet(pa), VertexSet(pb)};
    p.independent = VertexSet(ind);
    Graph g = Graph::build(static_cast<std::size_t>(k_count) + indep, edges);
    return fuzz_doc(solver, g, random_subset(p.independent, 1, p.independent.size(), rng()), p);
  }
  if (solver == "finite") {
    for (;;) {
      const std::size_t k = uniform(rng, 2, 3);
      SplitLikeParams params;
      params.part_sizes = random_parts(rng, k, 1, 2);
      params.independent_size = uniform(rng, 0, 8);
      params.attach_prob = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
      auto [g, p] = gen_random_split_like(params, rng());
      const int r = max_induced_star(g) + 1;
      const std::size_t bound = k * static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1);
      if (r > 4 || g.size() > bound || g.size() > max_n) continue;
      json c = fuzz_doc(solver, g, random_subset(all_vertices(g.size()), 1, g.size(), rng()), p);
      c["r"] = r;
      return c;
    }
  }
  throw std::invalid_argument("unknown fuzz solver '" + solver + "'");
}

// ------------------------------------------------------------- evaluators

std::string tail(const std::string& check) { return check.substr(check.find('/') + 1); }

Outcome eval_equivalence(const json& data) {
  Outcome o;
  const auto src = cover_from_json(data.at("source"));
  const auto art = build_artifact(data.at("target").get<std::string>(), src);
  const bool cover = solve_exact_cover(src).has_value();
  const bool steiner = decide(art.instance, art.budget());
  o.pass = cover == steiner;
  ++o.tallies[cover ? "source yes" : "source no"];
  if (!o.pass) ++o.tallies[cover ? "cover yes, steiner no" : "cover no, steiner yes"];
  return o;
}

Outcome eval_trisplit_budget(const json& data) {
  Outcome o;
  const auto src = cover_from_json(data.at("source"));
  const auto art = x3c_to_trisplit(src);
  const bool cover = solve_exact_cover(src).has_value();
  const auto opt = static_cast<long long>(solve_exact(art.instance).steiner.size());
  const auto x = static_cast<long long>(src.ground_size);
  const auto third = static_cast<long long>(src.q());
  const std::string side = cover ? "source yes: " : "source no: ";
  ++o.tallies[side + "count"];
  if (opt == x) ++o.tallies[side + "optimum = |X|"];
  if (opt < x) ++o.tallies[side + "optimum < |X|"];
  if (opt > x) ++o.tallies[side + "optimum > |X|"];
  if (opt <= third) ++o.tallies[side + "optimum <= |X|/3"];
  o.tallies[side + "sum optimum - |X|"] += opt - x;
  o.pass = cover == (opt <= x);
  return o;
}

bool two_disjoint_sets(const ExactCoverInstance& src) {
  for (std::size_t i = 0; i < src.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < src.sets.size(); ++j) {
      const auto& a = src.sets[i];
      const auto& b = src.sets[j];
      if (std::none_of(a.begin(), a.end(), [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); })) return true;
    }
  }
  return false;
}

Outcome eval_class(const json& data) {
  Outcome o;
  const auto src = cover_from_json(data.at("source"));
  const std::string target = data.at("target").get<std::string>();
  const auto art = build_artifact(target, src);
  const Graph& g = art.instance.graph;
  const auto& p = art.partition;
  auto require = [&](bool cond, const char* what) {
    if (!cond) {
      o.pass = false;
      ++o.tallies[std::string("violated: ") + what];
    }
  };
  require(is_connected(g), "connected");
  require(verify_partition(g, p), "partition certificate");
  require(art.names.size() == g.size(), "vertex names");
  const auto diam = diameter(g);
  if (diam) ++o.tallies["diameter " + std::to_string(*diam)];
  const std::size_t c = src.sets.size();
  if (target == "k15-bip" || target == "k14-bip") {
    require(recognize_bipartite(g).has_value() && p.k() == 1, "bipartite");
    require(is_k1r_free(g, *art.star_free_r), "K_{1,r}-free");
  } else if (target == "bisplit") {
    require(p.k() == 2, "two parts");
    require(is_k1r_free(g, static_cast<int>(c + src.set_size + 1)), "K_{1,|C|+l+1}-free");
  } else if (target == "trisplit") {
    require(p.k() == 3, "three parts");
    require(diam && *diam <= 4, "diameter <= 4");
  } else if (target == "bisplit-d3") {
    require(p.k() == 2, "two parts");
    require(bisplit_diam3_condition(g, p), "diameter-3 condition");
    require(diam && *diam <= 3, "diameter <= 3");
    if (two_disjoint_sets(src)) require(diam && *diam == 3, "diameter exactly 3");
  } else if (target == "trisplit-d3") {
    require(p.k() == 3, "three parts");
    require(diam && *diam <= 3, "diameter <= 3");
  } else if (target == "star-bip") {
    const auto apex = static_cast<Vertex>(c);
    require(p.k() == 1 && recognize_bipartite(g).has_value(), "bipartite");
    require(star_center_bipartite(g, art.instance.terminals, p.parts[0]) == apex, "star centre v");
  } else if (target == "star-bisplit-i") {
    const auto apex = static_cast<Vertex>(2 * c);
    require(p.k() == 2, "two parts");
    require(star_center_bisplit_independent(g, p) == apex, "independent-side centre u");
  } else {
    throw std::invalid_argument("no class check for target '" + target + "'");
  }
  return o;
}

Outcome eval_path_chordal(const json& data) {
  Outcome o;
  const auto ts = parse_triples_json(data.at("source").dump());
  const auto art = tdm_to_k14free_chordal(ts);
  const Graph& g = art.graph;
  auto require = [&](bool cond, const char* what) {
    if (!cond) {
      o.pass = false;
      ++o.tallies[std::string("violated: ") + what];
    }
  };
  require(is_connected(g), "connected");
  require(is_chordal(g).chordal, "chordal");
  // K grows with the triple count, so the default neighbourhood cap is too small.
  const int star = max_induced_star(g, StarOptions{64});
  ++o.tallies["max induced star " + std::to_string(star)];
  require(star <= 3, "K_{1,4}-free");
  for (const auto& q : art.cliques) {
    bool clique = true;
    for (Vertex u : q) {
      for (Vertex v : q) clique = clique && (u == v || g.has_edge(u, v));
    }
    require(clique, "clique certificate");
  }
  return o;
}

Outcome eval_lemma(const std::string& lemma, const json& data) {
  Outcome o;
  const auto doc = parse_stp(data.at("stp").get<std::string>());
  const Graph& g = doc.instance.graph;
  const auto& p = doc.partition.value();
  if (lemma == "split-diameter" || lemma == "bisplit-diameter" || lemma == "trisplit-diameter") {
    const int limit = lemma == "split-diameter" ? 3 : 4;
    const auto d = diameter(g);
    o.pass = d && *d <= limit;
    if (d) ++o.tallies["diameter " + std::to_string(*d)];
  } else if (lemma == "a3-iff") {
    const bool check = chordal_trisplit_check(g, p);
    const bool chordal = is_chordal(g).chordal;
    o.pass = check == chordal;
    ++o.tallies[std::string(chordal ? "chordal" : "not chordal") + (check ? ", check holds" : ", check fails")];
  } else if (lemma == "pro5-iff") {
    const bool cond = bisplit_diam3_condition(g, p);
    const auto d = diameter(g);
    o.pass = cond == (d && *d <= 3);
    ++o.tallies[cond ? "condition holds" : "condition fails"];
  } else if (lemma == "finite-bisplit" || lemma == "finite-trisplit") {
    const int star = max_induced_star(g);
    o.pass = star >= 3;
    ++o.tallies["max induced star " + std::to_string(std::min(star, 6)) + (star > 6 ? "+" : "")];
  } else {
    throw std::invalid_argument("unknown lemma check '" + lemma + "'");
  }
  return o;
}

VertexSet run_fuzz_solver(const std::string& solver, const StpDocument& doc, const json& data) {
  const auto& inst = doc.instance;
  if (solver == "hub") {
    auto r = solve_via_hub(inst);
    if (!r) throw std::runtime_error("hub solver returned nothing on a graph with a universal vertex");
    return r->solution.steiner;
  }
  if (solver == "claw") return solve_claw_free_bipartite(inst).solution.steiner;
  if (solver == "chordal-trisplit") return solve_chordal_trisplit(inst, doc.partition.value()).solution.steiner;
  if (solver == "chordal-trisplit-four") return chordal_trisplit_four_candidates(inst, doc.partition.value());
  if (solver == "chordal-ksplit") return solve_chordal_ksplit(inst, doc.partition.value()).solution.steiner;
  if (solver == "star-bisplit") {
    const auto& p = doc.partition.value();
    auto x = star_center_bisplit(inst.graph, p);
    if (!x) throw std::runtime_error("fuzz case has no biclique star centre");
    return solve_star_convex_bisplit_biclique(inst, p, *x).solution.steiner;
  }
  if (solver == "finite") {
    const auto& p = doc.partition.value();
    const int r = data.at("r").get<int>();
    return (p.k() == 2 ? solve_k1rfree_bisplit(inst, p, r) : solve_k1rfree_trisplit(inst, p, r)).solution.steiner;
  }
  throw std::invalid_argument("unknown fuzz solver '" + solver + "'");
}

Outcome eval_fuzz(const json& data, const SolverOverrides* overrides) {
  Outcome o;
  const std::string solver = data.at("solver").get<std::string>();
  const auto doc = parse_stp(data.at("stp").get<std::string>());
  const auto exact = solve_exact(doc.instance, ExactOptions{doc.instance.graph.size()});
  VertexSet s;
  if (overrides && overrides->contains(solver)) s = overrides->at(solver)(doc);
  else s = run_fuzz_solver(solver, doc, data);
  const auto sol = make_solution(doc.instance.graph, doc.instance.terminals, s);
  const bool valid = verify_solution(doc.instance, sol);
  o.pass = valid && s.size() == exact.steiner.size();
  if (!valid) ++o.tallies["invalid solution"];
  else if (s.size() > exact.steiner.size()) ++o.tallies["above optimum"];
  else if (s.size() < exact.steiner.size()) ++o.tallies["below optimum"];
  ++o.tallies["optimum " + std::to_string(exact.steiner.size())];
  return o;
}

json materialize(const Task& task) {
  if (!task.data.is_object() || !task.data.contains("recipe")) return task.data;
  const auto seed = task.data.at("recipe").get<std::uint64_t>();
  if (task.check.starts_with("lemma/")) return lemma_case(tail(task.check), seed);
  if (task.check.starts_with("fuzz/")) {
    return fuzz_case(tail(task.check), seed, task.data.value("max_vertices", std::size_t{16}));
  }
  throw std::invalid_argument("check '" + task.check + "' has no generator");
}

Outcome evaluate(const std::string& check, const json& data, const SolverOverrides* overrides) {
  if (check == "observe/trisplit-budget") return eval_trisplit_budget(data);
  if (check.starts_with("equivalence/")) return eval_equivalence(data);
  if (check == "class/path-chordal") return eval_path_chordal(data);
  if (check.starts_with("class/")) return eval_class(data);
  if (check.starts_with("lemma/")) return eval_lemma(tail(check), data);
  if (check.starts_with("fuzz/")) return eval_fuzz(data, overrides);
  throw std::invalid_argument("unknown check '" + check + "'");
}

void run_one(const Task& task, Report& report, const SolverOverrides* overrides) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  json data;
  try {
    data = materialize(task);
    o = evaluate(task.check, data, overrides);
  } catch (const std::exception& e) {
    o.pass = false;
    ++o.tallies["error"];
    if (data.is_null()) data = task.data;
    data["error"] = e.what();
  }
  CheckResult& r = report.checks[task.check];
  r.asserted = task.asserted;
  (o.pass ? r.passed : r.failed) += 1;
  for (const auto& [k, v] : o.tallies) r.tallies[k] += v;
  if (!o.pass) {
    keep_counterexample(r.counterexamples, json{{"format", 1},
                                                {"kind", "counterexample"},
                                                {"check", task.check},
                                                {"asserted", task.asserted},
                                                {"case", data}});
  }
  r.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Report run_tasks(const std::vector<Task>& tasks, const CampaignConfig& cfg, const SolverOverrides* overrides) {
  std::size_t threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, tasks.size()));
  std::vector<Report> local(threads);
  std::atomic<std::size_t> next{0};
  auto work = [&](std::size_t t) {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(tasks[i], local[t], overrides);
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  Report out;
  for (const auto& r : local) out.merge(r);
  return out;
}

void add_cover_tasks(std::vector<Task>& tasks, const std::string& check, bool asserted, const std::string& target,
                     const std::vector<ExactCoverInstance>& srcs) {
  for (const auto& s : srcs) tasks.push_back({check, asserted, json{{"target", target}, {"source", cover_to_json(s)}}});
}

void add_recipe_tasks(std::vector<Task>& tasks, const std::string& check, bool asserted, std::size_t count,
                      const CampaignConfig& cfg) {
  for (std::size_t i = 0; i < count; ++i) {
    json recipe{{"recipe", case_seed(cfg.seed, check, i)}};
    if (check.starts_with("fuzz/")) recipe["max_vertices"] = cfg.max_fuzz_vertices;
    tasks.push_back({check, asserted, recipe});
  }
}

}  // namespace

void Report::merge(const Report& other) {
  for (const auto& [name, r] : other.checks) {
    auto [it, fresh] = checks.try_emplace(name, r);
    if (fresh) continue;
    CheckResult& mine = it->second;
    mine.asserted = mine.asserted || r.asserted;
    mine.passed += r.passed;
    mine.failed += r.failed;
    mine.seconds += r.seconds;
    for (const auto& [k, v] : r.tallies) mine.tallies[k] += v;
    for (const auto& ce : r.counterexamples) keep_counterexample(mine.counterexamples, ce);
  }
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.ok(); });
}

json Report::to_json(bool with_timing) const {
  json out{{"format", 1}, {"kind", "report"}, {"ok", ok()}};
  json cs = json::object();
  for (const auto& [name, r] : checks) {
    json c{{"asserted", r.asserted},
           {"passed", r.passed},
           {"failed", r.failed},
           {"tallies", r.tallies},
           {"counterexamples", r.counterexamples}};
    if (with_timing) c["seconds"] = r.seconds;
    cs[name] = c;
  }
  out["checks"] = cs;
  return out;
}

Report run_equivalence_suite(const CampaignConfig& cfg) {
  const auto l3 = sources(cfg, 3, std::nullopt);
  const auto capped = sources(cfg, 3, 3);
  const auto l4 = sources(cfg, 4, std::nullopt);
  std::vector<Task> tasks;
  add_cover_tasks(tasks, "equivalence/k15-bip", true, "k15-bip", capped);
  add_cover_tasks(tasks, "equivalence/bisplit-l3", true, "bisplit", l3);
  add_cover_tasks(tasks, "equivalence/bisplit-l4", true, "bisplit", l4);
  add_cover_tasks(tasks, "equivalence/trisplit", true, "trisplit", l3);
  add_cover_tasks(tasks, "equivalence/bisplit-d3", true, "bisplit-d3", l3);
  add_cover_tasks(tasks, "equivalence/star-bip", true, "star-bip", l3);
  add_cover_tasks(tasks, "equivalence/star-bisplit-i", true, "star-bisplit-i", l3);
  add_cover_tasks(tasks, "equivalence/k14-bip", false, "k14-bip", capped);
  add_cover_tasks(tasks, "equivalence/trisplit-d3", false, "trisplit-d3", l3);
  for (const auto& s : l3) tasks.push_back({"observe/trisplit-budget", false, json{{"source", cover_to_json(s)}}});
  return run_tasks(tasks, cfg, nullptr);
}

Report run_structure_suite(const CampaignConfig& cfg) {
  const auto l3 = sources(cfg, 3, std::nullopt);
  const auto capped = sources(cfg, 3, 3);
  const auto l4 = sources(cfg, 4, std::nullopt);
  std::vector<Task> tasks;
  add_cover_tasks(tasks, "class/k15-bip", true, "k15-bip", capped);
  add_cover_tasks(tasks, "class/k14-bip", true, "k14-bip", capped);
  add_cover_tasks(tasks, "class/bisplit-l3", true, "bisplit", l3);
  add_cover_tasks(tasks, "class/bisplit-l4", true, "bisplit", l4);
  add_cover_tasks(tasks, "class/trisplit", true, "trisplit", l3);
  add_cover_tasks(tasks, "class/bisplit-d3", true, "bisplit-d3", l3);
  add_cover_tasks(tasks, "class/trisplit-d3", true, "trisplit-d3", l3);
  add_cover_tasks(tasks, "class/star-bip", true, "star-bip", l3);
  add_cover_tasks(tasks, "class/star-bisplit-i", true, "star-bisplit-i", l3);
  for (std::size_t i = 0; i < cfg.equivalence_sources; ++i) {
    auto ts = random_triple_system(case_seed(cfg.seed, "triples", i));
    tasks.push_back({"class/path-chordal", true, json{{"source", triples_to_json(ts)}}});
  }
  for (const char* lemma : {"split-diameter", "bisplit-diameter", "trisplit-diameter", "a3-iff", "pro5-iff",
                            "finite-bisplit", "finite-trisplit"}) {
    add_recipe_tasks(tasks, std::string("lemma/") + lemma, true, cfg.lemma_instances, cfg);
  }
  return run_tasks(tasks, cfg, nullptr);
}

const std::vector<std::string>& fuzz_solver_names() {
  static const std::vector<std::string> names{"hub",          "claw",   "chordal-trisplit",    "chordal-ksplit",
                                              "star-bisplit", "finite", "chordal-trisplit-four"};
  return names;
}

json make_fuzz_case(const std::string& solver, std::uint64_t seed, std::size_t max_vertices) {
  return fuzz_case(solver, seed, max_vertices);
}

Report run_solver_fuzz(const CampaignConfig& cfg, const SolverOverrides& overrides) {
  std::vector<Task> tasks;
  for (const auto& solver : fuzz_solver_names()) {
    add_recipe_tasks(tasks, "fuzz/" + solver, solver != "chordal-trisplit-four", cfg.fuzz_instances, cfg);
  }
  return run_tasks(tasks, cfg, &overrides);
}

Report replay(std::string_view counterexample_json) {
  json j;
  try {
    j = json::parse(counterexample_json);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("malformed counterexample: ") + e.what());
  }
  if (!j.is_object() || j.value("format", 0) != 1 || j.value("kind", std::string()) != "counterexample" ||
      !j.contains("check") || !j.contains("case") || !j["check"].is_string()) {
    throw ParseError(0, "not a counterexample file (needs format 1, kind, check, case)");
  }
  Task task{j["check"].get<std::string>(), j.value("asserted", true), j["case"]};
  task.data.erase("error");
  Report report;
  run_one(task, report, nullptr);
  return report;
}

}  // namespace splitlike
