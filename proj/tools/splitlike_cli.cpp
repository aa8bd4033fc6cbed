#include <filesystem>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "splitlike/errors.hpp"
#include "splitlike/harness.hpp"
#include "splitlike/io.hpp"
#include "splitlike/poly.hpp"

namespace sl = splitlike;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kVerifyFailed = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json ids_json(const sl::VertexSet& s) {
  json out = json::array();
  for (sl::Vertex v : s) out.push_back(v + 1);
  return out;
}

sl::SplitLikePartition partition_for(const sl::StpDocument& doc, std::size_t k, const sl::ClassReport& report) {
  if (doc.partition && doc.partition->k() == k) return *doc.partition;
  const auto& found = k == 2 ? report.bisplit : report.trisplit;
  if (k <= 3 && found) return *found;
  throw UsageError("no " + std::to_string(k) + "-part certificate in the file and none was found");
}

int cmd_recognize(const std::string& file) {
  auto doc = sl::parse_stp(sl::read_text_file(file));
  std::cout << sl::class_report_json(sl::classify(doc.instance.graph, doc.partition)).dump(2) << "\n";
  return kOk;
}

int cmd_solve(const std::string& file, const std::string& algo, bool exact_fallback) {
  auto doc = sl::parse_stp(sl::read_text_file(file));
  const auto& inst = doc.instance;
  sl::validate_instance(inst);
  std::optional<sl::PolyResult> result;
  if (algo == "exact") {
    result = sl::PolyResult{sl::solve_exact(inst), sl::PolyAlgorithm::Exact, "exhaustive search"};
  } else if (algo == "hub") {
    result = sl::solve_via_hub(inst);
    if (!result) throw UsageError("terminals are not connected and no vertex is adjacent to all of them");
  } else if (algo == "claw") {
    result = sl::solve_claw_free_bipartite(inst);
  } else {
    const auto report = sl::classify(inst.graph, doc.partition);
    if (algo == "auto") {
      result = sl::dispatch(inst, report);
      if (!result && exact_fallback) {
        result = sl::PolyResult{sl::solve_exact(inst), sl::PolyAlgorithm::Exact, "exhaustive search (fallback)"};
      }
      if (!result) throw UsageError("no specialised algorithm applies; rerun with --exact");
    } else if (algo == "chordal-ksplit") {
      std::optional<sl::SplitLikePartition> p = doc.partition;
      if (!p) p = report.trisplit ? report.trisplit : report.bisplit;
      if (!p) throw UsageError("no k-split certificate in the file and none was found");
      result = sl::solve_chordal_ksplit(inst, *p);
    } else if (algo == "star-bisplit") {
      const auto p = partition_for(doc, 2, report);
      const auto x = sl::star_center_bisplit(inst.graph, p);
      if (!x) throw UsageError("the bisplit certificate has no star centre on the biclique");
      result = sl::solve_star_convex_bisplit_biclique(inst, p, *x);
    }
  }
  const auto& s = result->solution.steiner;
  json out{{"format", 1},
           {"kind", "solution"},
           {"algorithm", sl::to_string(result->algorithm)},
           {"certificate", result->certificate},
           {"steiner", ids_json(s)},
           {"size", s.size()}};
  json edges = json::array();
  for (auto [u, v] : result->solution.tree_edges) edges.push_back({u + 1, v + 1});
  out["tree_edges"] = edges;
  int code = kOk;
  if (inst.budget) {
    const bool yes = s.size() <= *inst.budget;
    out["budget"] = *inst.budget;
    out["decision"] = yes ? "yes" : "no";
    if (!yes) code = kNo;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

int cmd_reduce(const std::string& from, const std::string& target, const std::string& in, const std::string& out) {
  const std::string text = sl::read_text_file(in);
  const std::filesystem::path sidecar = out + ".json";
  if (target == "path-chordal") {
    if (from != "3dm") throw UsageError("target path-chordal takes --from 3dm");
    const auto art = sl::tdm_to_k14free_chordal(sl::parse_triples_json(text));
    sl::StpDocument doc;
    doc.instance.graph = art.graph;
    sl::write_text_file(out, sl::write_stp(doc));
    sl::write_text_file(sidecar, sl::write_clique_sidecar(art));
    return kOk;
  }
  if (from == "3dm") throw UsageError("--from 3dm only feeds --target path-chordal");
  auto src = sl::parse_cover_json(text);
  if (from == "xlc") {
    if (target != "bisplit") throw UsageError("--from xlc only feeds --target bisplit");
  } else {
    if (src.set_size != 3) throw UsageError("--from " + from + " needs sets of size 3");
    if (from == "x3c3") {
      std::vector<std::size_t> occ(src.ground_size, 0);
      for (const auto& set : src.sets) {
        for (int x : set) ++occ[static_cast<std::size_t>(x)];
      }
      for (std::size_t c : occ) {
        if (c > 3) throw UsageError("--from x3c3: an element lies in more than three sets");
      }
    } else if (target == "k15-bip" || target == "k14-bip") {
      throw UsageError("target " + target + " takes --from x3c3");
    }
  }
  const auto art = sl::build_artifact(target, src);
  sl::write_text_file(out, sl::write_stp(sl::artifact_document(art)));
  sl::write_text_file(sidecar, sl::write_artifact_sidecar(art));
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<std::size_t> count, std::size_t threads,
               bool timing, const std::string& counterexample_dir) {
  sl::CampaignConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  if (count) cfg.equivalence_sources = cfg.lemma_instances = cfg.fuzz_instances = *count;
  sl::Report report;
  if (suite == "equivalence") report = sl::run_equivalence_suite(cfg);
  else if (suite == "structure") report = sl::run_structure_suite(cfg);
  else report = sl::run_solver_fuzz(cfg);
  std::cout << report.to_json(timing).dump(2) << "\n";
  if (!counterexample_dir.empty()) {
    std::filesystem::create_directories(counterexample_dir);
    for (const auto& [name, r] : report.checks) {
      std::string stem = name;
      std::replace(stem.begin(), stem.end(), '/', '_');
      for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
        sl::write_text_file(std::filesystem::path(counterexample_dir) / (stem + "_" + std::to_string(i) + ".json"),
                            r.counterexamples[i].dump(2) + "\n");
      }
    }
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_replay(const std::string& file) {
  const auto report = sl::replay(sl::read_text_file(file));
  std::cout << report.to_json(false).dump(2) << "\n";
  return report.ok() && report.checks.begin()->second.failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner trees on split-like graphs"};
  app.require_subcommand(1);

  std::string file, algo = "auto", from, target, in, out, suite, ce_dir;
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  std::size_t threads = 0;
  bool exact_fallback = false, timing = false;

  auto* recognize = app.add_subcommand("recognize", "Print the class report of an STP file");
  recognize->add_option("file", file)->required()->check(CLI::ExistingFile);

  auto* solve = app.add_subcommand("solve", "Solve an STP instance");
  solve->add_option("file", file)->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember({"auto", "exact", "claw", "hub", "chordal-ksplit", "star-bisplit"}));
  solve->add_option("--seed", seed, "Accepted for symmetry; every solver is deterministic");
  solve->add_flag("--exact", exact_fallback, "With --algo auto, fall back to the exact search");

  auto* reduce = app.add_subcommand("reduce", "Build a reduction artifact (writes OUT and OUT.json)");
  reduce->add_option("--from", from)->required()->check(CLI::IsMember({"x3c3", "xlc", "x3c", "3dm"}));
  reduce->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"k15-bip", "k14-bip", "bisplit", "trisplit", "bisplit-d3", "trisplit-d3", "star-bip",
                             "star-bisplit-i", "path-chordal"}));
  reduce->add_option("in", in)->required()->check(CLI::ExistingFile);
  reduce->add_option("out", out)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification campaign and print its report");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"equivalence", "structure", "fuzz"}));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count, "Random instances per check");
  verify->add_option("--threads", threads, "0 uses every core");
  verify->add_flag("--timing", timing, "Include per-check seconds");
  verify->add_option("--counterexamples", ce_dir, "Directory for counterexample files");

  auto* replay = app.add_subcommand("replay", "Re-run a stored counterexample");
  replay->add_option("file", file)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*recognize) return cmd_recognize(file);
    if (*solve) return cmd_solve(file, algo, exact_fallback);
    if (*reduce) return cmd_reduce(from, target, in, out);
    if (*verify) return cmd_verify(suite, seed, count, threads, timing, ce_dir);
    if (*replay) return cmd_replay(file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
