#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "splitlike/classes.hpp"
#include "splitlike/cover.hpp"
#include "splitlike/gadgets.hpp"
#include "splitlike/steiner.hpp"

namespace splitlike {

/// Unweighted SteinLib-style document. Ids are 1-based in text, 0-based here.
struct StpDocument {
  SteinerInstance instance;
  std::optional<SplitLikePartition> partition;
};

/// Sections: Comment (ignored), Graph, Terminals, Partition, Budget. Graph is
/// required; a missing Terminals section means no terminals. Throws
/// ParseError with the offending line number.
StpDocument parse_stp(std::string_view text);
std::string write_stp(const StpDocument& doc);

std::string write_cover_json(const ExactCoverInstance& inst);
/// Throws ParseError on malformed JSON or an instance that fails validate().
ExactCoverInstance parse_cover_json(std::string_view text);

std::string write_triples_json(const TripleSystem& ts);
TripleSystem parse_triples_json(std::string_view text);

nlohmann::json cover_to_json(const ExactCoverInstance& inst);
ExactCoverInstance cover_from_json(const nlohmann::json& j);

/// JSON outputs use the 1-based ids of the STP files.
/// Artifact = STP text (graph, terminals, certificate, budget) plus a JSON
/// sidecar holding names, class claim, notes and the source instance.
StpDocument artifact_document(const ReductionArtifact& art);
std::string write_artifact_sidecar(const ReductionArtifact& art);
ReductionArtifact parse_artifact(std::string_view stp_text, std::string_view sidecar_text);
/// Sidecar for the graph-only construction; clique ids are 1-based.
std::string write_clique_sidecar(const CliqueArtifact& art);

nlohmann::json partition_to_json(const SplitLikePartition& p);
nlohmann::json class_report_json(const ClassReport& report);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace splitlike
