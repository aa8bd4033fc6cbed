#include <filesystem>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "doctest.h"
#include "splitlike/errors.hpp"
#include "splitlike/gadgets.hpp"
#include "splitlike/generators.hpp"
#include "splitlike/io.hpp"

using namespace splitlike;

namespace {

std::string fixture(const char* name) { return read_text_file(std::filesystem::path(TEST_DATA_DIR) / name); }

std::size_t error_line(std::string_view text) {
  try {
    parse_stp(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* kHeader = "33D32945 STP File, STP Format Version 1.0\n";

}  // namespace

TEST_CASE("minimal path document") {
  auto doc = parse_stp(fixture("p3.stp"));
  CHECK(doc.instance.graph == Graph::build(3, {{0, 1}, {1, 2}}));
  CHECK(doc.instance.terminals == VertexSet{0, 2});
  CHECK_FALSE(doc.partition);
  CHECK_FALSE(doc.instance.budget);
}

TEST_CASE("keywords are case-insensitive") {
  auto doc = parse_stp(fixture("c6.stp"));
  CHECK(doc.instance.graph.size() == 6);
  CHECK(doc.instance.budget == std::size_t{1});
}

TEST_CASE("fixtures round-trip") {
  for (const char* name : {"p3.stp", "c6.stp", "trisplit.stp"}) {
    auto doc = parse_stp(fixture(name));
    const auto text = write_stp(doc);
    auto again = parse_stp(text);
    CHECK(again.instance.graph == doc.instance.graph);
    CHECK(again.instance.terminals == doc.instance.terminals);
    CHECK(again.instance.budget == doc.instance.budget);
    CHECK(again.partition == doc.partition);
    CHECK(write_stp(again) == text);
  }
  auto tri = parse_stp(fixture("trisplit.stp"));
  REQUIRE(tri.partition);
  CHECK(tri.partition->parts.size() == 3);
  CHECK(tri.partition->independent == VertexSet{4, 5, 6});
  CHECK(verify_partition(tri.instance.graph, *tri.partition));
}

TEST_CASE("random documents round-trip") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SplitLikeParams params;
    params.part_sizes = {1 + seed % 3, 2};
    if (seed % 4 == 0) {
      params.part_sizes = {3};
      params.kind = PartitionKind::Clique;
    }
    params.independent_size = seed % 5;
    auto [g, p] = gen_random_split_like(params, seed);
    StpDocument doc;
    doc.instance.graph = g;
    doc.instance.terminals = random_subset(p.k_side().united(p.independent), 1, 3, seed);
    if (seed % 2) doc.instance.budget = seed % 4;
    doc.partition = p;
    auto back = parse_stp(write_stp(doc));
    CHECK(back.instance.graph == g);
    CHECK(back.instance.terminals == doc.instance.terminals);
    CHECK(back.instance.budget == doc.instance.budget);
    CHECK(back.partition == p);
  }
}

TEST_CASE("malformed documents report the offending line") {
  const std::string extra_edge = std::string(kHeader) + "SECTION Graph\nNodes 3\nEdges 2\nE 1 2\nE 2 3\nE 1 3\nEND\nEOF\n";
  CHECK(error_line(extra_edge) == 7);

  const std::string dup = std::string(kHeader) + "SECTION Graph\nNodes 3\nEdges 2\nE 1 2\nE 2 1\nEND\nEOF\n";
  CHECK(error_line(dup) == 6);

  const std::string range = std::string(kHeader) +
                            "SECTION Graph\nNodes 2\nEdges 1\nE 1 2\nEND\nSECTION Terminals\nTerminals 1\nT 3\nEND\nEOF\n";
  CHECK(error_line(range) == 9);

  const std::string weighted = std::string(kHeader) + "SECTION Graph\nNodes 2\nEdges 1\nE 1 2 5\nEND\nEOF\n";
  CHECK(error_line(weighted) == 5);

  const std::string unknown = std::string(kHeader) + "SECTION Graph\nNodes 1\nEdges 0\nEND\nSECTION Coordinates\nEND\nEOF\n";
  CHECK(error_line(unknown) == 6);

  const std::string short_count = std::string(kHeader) + "SECTION Graph\nNodes 3\nEdges 3\nE 1 2\nE 2 3\nEND\nEOF\n";
  CHECK(error_line(short_count) == 7);

  const std::string loop = std::string(kHeader) + "SECTION Graph\nNodes 2\nEdges 1\nE 2 2\nEND\nEOF\n";
  CHECK(error_line(loop) == 5);

  CHECK(error_line("SECTION Graph\nNodes 1\nEdges 0\nEND\nEOF\n") == 1);
}

TEST_CASE("cover documents") {
  auto yes = parse_cover_json(fixture("x3c_yes.json"));
  CHECK(yes.ground_size == 6);
  CHECK(yes.occurrence_cap == std::size_t{3});
  CHECK(parse_cover_json(write_cover_json(yes)) == yes);
  auto no = parse_cover_json(fixture("x3c_no.json"));
  CHECK_FALSE(no.occurrence_cap);
  CHECK(parse_cover_json(write_cover_json(no)) == no);

  CHECK_THROWS_AS(parse_cover_json(R"({"format":1,"kind":"exact-cover","ground_size":6,"set_size":3,
    "sets":[[0,1,2],[0,3,4],[0,4,5],[0,1,5]],"occurrence_cap":3})"),
                  ParseError);
  CHECK_THROWS_AS(parse_cover_json(R"({"format":2,"kind":"exact-cover"})"), ParseError);
  CHECK_THROWS_AS(parse_cover_json("{not json"), ParseError);

  auto ts = parse_triples_json(fixture("tdm.json"));
  CHECK(ts.n == 2);
  CHECK(ts.triples.size() == 3);
  CHECK(parse_triples_json(write_triples_json(ts)) == ts);
  CHECK_THROWS_AS(parse_triples_json(R"({"format":1,"kind":"3dm","n":1,"triples":[[0,1,0]]})"), ParseError);
}

TEST_CASE("artifacts parse back to equal values") {
  auto src = parse_cover_json(fixture("x3c_yes.json"));
  for (const char* t : {"k15-bip", "k14-bip", "bisplit", "trisplit", "bisplit-d3", "trisplit-d3", "star-bip",
                        "star-bisplit-i"}) {
    auto a = build_artifact(t, src);
    auto back = parse_artifact(write_stp(artifact_document(a)), write_artifact_sidecar(a));
    CHECK(back == a);
  }
  CHECK_THROWS_AS(parse_artifact(fixture("p3.stp"), "{}"), ParseError);
}

TEST_CASE("report ids are one-based") {
  auto j = partition_to_json(*parse_stp(fixture("trisplit.stp")).partition);
  CHECK(j["parts"][0] == nlohmann::json::array({1}));
  CHECK(j["independent"] == nlohmann::json::array({5, 6, 7}));
}
