#include "splitlike/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "splitlike/errors.hpp"

namespace splitlike {

using nlohmann::json;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool keyword(std::string_view token, std::string_view expected) { return lower(token) == lower(expected); }

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(token) + "'");
  }
  return value;
}

Vertex parse_id(std::string_view token, std::size_t n, std::size_t line) {
  std::size_t id = parse_count(token, line, "a vertex id");
  if (id < 1 || id > n) {
    throw ParseError(line, "vertex id " + std::string(token) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

enum class Section { None, Comment, Graph, Terminals, Partition, Budget };

class StpParser {
 public:
  StpDocument run(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size() && !done_) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_;
      handle(text.substr(start, end - start));
      start = end + 1;
    }
    if (!header_) throw ParseError(0, "missing STP header line");
    if (section_ != Section::None) throw ParseError(line_, "unterminated section at end of input");
    if (!nodes_) throw ParseError(0, "missing Graph section");
    doc_.instance.graph = Graph::build(*nodes_, edges_);
    doc_.instance.terminals = VertexSet(terminals_);
    if (partition_started_) {
      partition_.independent = VertexSet(independent_);
      doc_.partition = partition_;
    }
    return std::move(doc_);
  }

 private:
  void handle(std::string_view raw) {
    while (!raw.empty() && (raw.back() == '\r' || std::isspace(static_cast<unsigned char>(raw.back())))) raw.remove_suffix(1);
    auto tok = tokens_of(raw);
    if (tok.empty()) return;
    if (!header_) {
      if (!keyword(tok[0], "33D32945")) throw ParseError(line_, "expected the '33D32945 STP File' header");
      header_ = true;
      return;
    }
    if (section_ == Section::None) {
      if (keyword(tok[0], "EOF")) {
        done_ = true;
      } else if (keyword(tok[0], "SECTION") && tok.size() == 2) {
        open(tok[1]);
      } else {
        throw ParseError(line_, "expected SECTION or EOF");
      }
      return;
    }
    if (keyword(tok[0], "END") && tok.size() == 1) {
      close();
      return;
    }
    switch (section_) {
      case Section::Comment: return;
      case Section::Graph: graph_line(tok); return;
      case Section::Terminals: terminal_line(tok); return;
      case Section::Partition: partition_line(tok); return;
      case Section::Budget: budget_line(tok); return;
      case Section::None: return;
    }
  }

  void open(const std::string& name) {
    static const std::pair<const char*, Section> known[] = {{"Comment", Section::Comment},
                                                            {"Graph", Section::Graph},
                                                            {"Terminals", Section::Terminals},
                                                            {"Partition", Section::Partition},
                                                            {"Budget", Section::Budget}};
    for (auto [label, s] : known) {
      if (!keyword(name, label)) continue;
      if (!seen_.insert(s).second) throw ParseError(line_, "duplicate section " + name);
      if (s != Section::Comment && s != Section::Graph && !nodes_) {
        throw ParseError(line_, "section " + name + " must follow the Graph section");
      }
      section_ = s;
      return;
    }
    throw ParseError(line_, "unknown section '" + name + "'");
  }

  void close() {
    if (section_ == Section::Graph) {
      if (!nodes_ || !edge_count_) throw ParseError(line_, "Graph section needs Nodes and Edges");
      if (edges_.size() != *edge_count_) {
        throw ParseError(line_, "Edges " + std::to_string(*edge_count_) + " declared but " +
                                    std::to_string(edges_.size()) + " E lines given");
      }
    }
    if (section_ == Section::Terminals) {
      if (!terminal_count_) throw ParseError(line_, "Terminals section needs a Terminals count");
      if (terminals_.size() != *terminal_count_) {
        throw ParseError(line_, "Terminals " + std::to_string(*terminal_count_) + " declared but " +
                                    std::to_string(terminals_.size()) + " T lines given");
      }
    }
    if (section_ == Section::Budget && !doc_.instance.budget) throw ParseError(line_, "Budget section is empty");
    section_ = Section::None;
  }

  void graph_line(const std::vector<std::string>& tok) {
    if (keyword(tok[0], "Nodes") && tok.size() == 2) {
      if (nodes_) throw ParseError(line_, "Nodes given twice");
      nodes_ = parse_count(tok[1], line_, "Nodes");
      if (*nodes_ == 0) throw ParseError(line_, "a graph needs at least one node");
    } else if (keyword(tok[0], "Edges") && tok.size() == 2) {
      if (edge_count_) throw ParseError(line_, "Edges given twice");
      edge_count_ = parse_count(tok[1], line_, "Edges");
    } else if (keyword(tok[0], "E")) {
      if (!nodes_ || !edge_count_) throw ParseError(line_, "E line before Nodes and Edges");
      if (tok.size() == 4) throw ParseError(line_, "weighted edges are not supported");
      if (tok.size() != 3) throw ParseError(line_, "expected 'E u v'");
      if (edges_.size() == *edge_count_) {
        throw ParseError(line_, "more E lines than the declared Edges " + std::to_string(*edge_count_));
      }
      Vertex u = parse_id(tok[1], *nodes_, line_);
      Vertex v = parse_id(tok[2], *nodes_, line_);
      if (u == v) throw ParseError(line_, "self-loop on vertex " + tok[1]);
      if (!edge_set_.emplace(std::min(u, v), std::max(u, v)).second) throw ParseError(line_, "duplicate edge");
      edges_.emplace_back(u, v);
    } else {
      throw ParseError(line_, "unexpected line in Graph section");
    }
  }

  void terminal_line(const std::vector<std::string>& tok) {
    if (keyword(tok[0], "Terminals") && tok.size() == 2) {
      if (terminal_count_) throw ParseError(line_, "Terminals count given twice");
      terminal_count_ = parse_count(tok[1], line_, "Terminals");
    } else if (keyword(tok[0], "T") && tok.size() == 2) {
      if (!terminal_count_) throw ParseError(line_, "T line before the Terminals count");
      if (terminals_.size() == *terminal_count_) {
        throw ParseError(line_, "more T lines than the declared Terminals " + std::to_string(*terminal_count_));
      }
      Vertex t = parse_id(tok[1], *nodes_, line_);
      if (std::find(terminals_.begin(), terminals_.end(), t) != terminals_.end()) {
        throw ParseError(line_, "duplicate terminal " + tok[1]);
      }
      terminals_.push_back(t);
    } else {
      throw ParseError(line_, "unexpected line in Terminals section");
    }
  }

  void partition_line(const std::vector<std::string>& tok) {
    partition_started_ = true;
    if (keyword(tok[0], "Kind") && tok.size() == 2) {
      if (keyword(tok[1], "clique")) partition_.kind = PartitionKind::Clique;
      else if (keyword(tok[1], "multipartite")) partition_.kind = PartitionKind::CompleteMultipartite;
      else throw ParseError(line_, "Kind must be clique or multipartite");
      return;
    }
    std::size_t first_id = 0;
    std::vector<Vertex>* target = nullptr;
    std::vector<Vertex> part;
    if (keyword(tok[0], "Part") && tok.size() >= 2 && tok[1].back() == ':') {
      std::size_t index = parse_count(std::string_view(tok[1]).substr(0, tok[1].size() - 1), line_, "Part index");
      if (index != partition_.parts.size() + 1) throw ParseError(line_, "parts must be numbered 1, 2, ... in order");
      target = &part;
      first_id = 2;
    } else if (keyword(tok[0], "Independent:")) {
      if (independent_seen_) throw ParseError(line_, "Independent given twice");
      independent_seen_ = true;
      target = &independent_;
      first_id = 1;
    } else {
      throw ParseError(line_, "unexpected line in Partition section");
    }
    for (std::size_t i = first_id; i < tok.size(); ++i) target->push_back(parse_id(tok[i], *nodes_, line_));
    if (target == &part) partition_.parts.emplace_back(std::move(part));
  }

  void budget_line(const std::vector<std::string>& tok) {
    if (!keyword(tok[0], "Budget") || tok.size() != 2) throw ParseError(line_, "expected 'Budget k'");
    if (doc_.instance.budget) throw ParseError(line_, "Budget given twice");
    doc_.instance.budget = parse_count(tok[1], line_, "Budget");
  }

  StpDocument doc_;
  std::size_t line_ = 0;
  bool header_ = false;
  bool done_ = false;
  Section section_ = Section::None;
  std::set<Section> seen_;
  std::optional<std::size_t> nodes_;
  std::optional<std::size_t> edge_count_;
  std::vector<Edge> edges_;
  std::set<Edge> edge_set_;
  std::optional<std::size_t> terminal_count_;
  std::vector<Vertex> terminals_;
  bool partition_started_ = false;
  bool independent_seen_ = false;
  SplitLikePartition partition_;
  std::vector<Vertex> independent_;
};

void append_ids(std::string& out, const VertexSet& s) {
  for (Vertex v : s) out += " " + std::to_string(v + 1);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
}

void expect_header(const json& j, const char* kind) {
  if (!j.is_object()) throw ParseError(0, "expected a JSON object");
  if (!j.contains("format") || j["format"] != 1) throw ParseError(0, "unsupported or missing \"format\" (expected 1)");
  if (!j.contains("kind") || j["kind"] != kind) throw ParseError(0, std::string("expected \"kind\": \"") + kind + "\"");
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(0, std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("bad field \"") + name + "\": " + e.what());
  }
}

// Reports use the same 1-based ids as the STP files.
json ids_json(const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

}  // namespace

StpDocument parse_stp(std::string_view text) { return StpParser().run(text); }

std::string write_stp(const StpDocument& doc) {
  const auto& g = doc.instance.graph;
  std::string out = "33D32945 STP File, STP Format Version 1.0\n\nSECTION Graph\n";
  out += "Nodes " + std::to_string(g.size()) + "\nEdges " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "E " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  out += "END\n\nSECTION Terminals\nTerminals " + std::to_string(doc.instance.terminals.size()) + "\n";
  for (Vertex t : doc.instance.terminals) out += "T " + std::to_string(t + 1) + "\n";
  out += "END\n";
  if (doc.partition) {
    const auto& p = *doc.partition;
    out += "\nSECTION Partition\nKind ";
    out += p.kind == PartitionKind::Clique ? "clique\n" : "multipartite\n";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      out += "Part " + std::to_string(i + 1) + ":";
      append_ids(out, p.parts[i]);
      out += "\n";
    }
    out += "Independent:";
    append_ids(out, p.independent);
    out += "\nEND\n";
  }
  if (doc.instance.budget) out += "\nSECTION Budget\nBudget " + std::to_string(*doc.instance.budget) + "\nEND\n";
  out += "\nEOF\n";
  return out;
}

json cover_to_json(const ExactCoverInstance& inst) {
  json j{{"format", 1}, {"kind", "exact-cover"}, {"ground_size", inst.ground_size}, {"set_size", inst.set_size},
         {"sets", inst.sets}};
  j["occurrence_cap"] = inst.occurrence_cap ? json(*inst.occurrence_cap) : json(nullptr);
  return j;
}

ExactCoverInstance cover_from_json(const json& j) {
  expect_header(j, "exact-cover");
  ExactCoverInstance inst;
  inst.ground_size = field<std::size_t>(j, "ground_size");
  inst.set_size = field<std::size_t>(j, "set_size");
  inst.sets = field<std::vector<std::vector<int>>>(j, "sets");
  if (j.contains("occurrence_cap") && !j["occurrence_cap"].is_null()) {
    inst.occurrence_cap = field<std::size_t>(j, "occurrence_cap");
  }
  if (auto v = validate(inst); !v) {
    throw ParseError(0, "invalid exact-cover instance: " + to_string(v.issue) + " (set " + std::to_string(v.set_index) + ")");
  }
  return inst;
}

std::string write_cover_json(const ExactCoverInstance& inst) { return cover_to_json(inst).dump(2) + "\n"; }

ExactCoverInstance parse_cover_json(std::string_view text) { return cover_from_json(parse_json(text)); }

std::string write_triples_json(const TripleSystem& ts) {
  json j{{"format", 1}, {"kind", "3dm"}, {"n", ts.n}, {"triples", ts.triples}};
  return j.dump(2) + "\n";
}

TripleSystem parse_triples_json(std::string_view text) {
  json j = parse_json(text);
  expect_header(j, "3dm");
  TripleSystem ts;
  ts.n = field<std::size_t>(j, "n");
  ts.triples = field<std::vector<std::array<int, 3>>>(j, "triples");
  if (!validate(ts)) throw ParseError(0, "triple coordinate outside 0.." + std::to_string(ts.n) + "-1");
  return ts;
}

StpDocument artifact_document(const ReductionArtifact& art) { return {art.instance, art.partition}; }

std::string write_artifact_sidecar(const ReductionArtifact& art) {
  json j{{"format", 1},
         {"kind", "artifact"},
         {"construction", art.construction},
         {"claimed_class", art.claimed_class},
         {"names", art.names},
         {"notes", art.notes},
         {"source", cover_to_json(art.source)}};
  j["star_free_r"] = art.star_free_r ? json(*art.star_free_r) : json(nullptr);
  return j.dump(2) + "\n";
}

ReductionArtifact parse_artifact(std::string_view stp_text, std::string_view sidecar_text) {
  StpDocument doc = parse_stp(stp_text);
  if (!doc.partition) throw ParseError(0, "artifact STP lacks a Partition section");
  if (!doc.instance.budget) throw ParseError(0, "artifact STP lacks a Budget section");
  json j = parse_json(sidecar_text);
  expect_header(j, "artifact");
  ReductionArtifact art;
  art.instance = std::move(doc.instance);
  art.partition = std::move(*doc.partition);
  art.construction = field<std::string>(j, "construction");
  art.claimed_class = field<std::string>(j, "claimed_class");
  art.names = field<std::vector<std::string>>(j, "names");
  art.notes = field<std::vector<std::string>>(j, "notes");
  if (j.contains("star_free_r") && !j["star_free_r"].is_null()) art.star_free_r = field<int>(j, "star_free_r");
  if (!j.contains("source")) throw ParseError(0, "missing field \"source\"");
  art.source = cover_from_json(j["source"]);
  if (art.names.size() != art.instance.graph.size()) throw ParseError(0, "names do not match the vertex count");
  return art;
}

std::string write_clique_sidecar(const CliqueArtifact& art) {
  json cliques = json::array();
  for (const auto& q : art.cliques) cliques.push_back(ids_json(q));
  json j{{"format", 1},
         {"kind", "clique-artifact"},
         {"construction", "path-chordal"},
         {"claimed_class", art.claimed_class},
         {"star_free_r", art.star_free_r},
         {"names", art.names},
         {"cliques", cliques},
         {"source", json::parse(write_triples_json(art.source))}};
  return j.dump(2) + "\n";
}

json partition_to_json(const SplitLikePartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(ids_json(part));
  return {{"kind", p.kind == PartitionKind::Clique ? "clique" : "multipartite"},
          {"parts", parts},
          {"independent", ids_json(p.independent)}};
}

json class_report_json(const ClassReport& r) {
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  auto sides = [](const std::optional<std::pair<VertexSet, VertexSet>>& s) {
    return s ? json::array({ids_json(s->first), ids_json(s->second)}) : json(nullptr);
  };
  auto id = [](const std::optional<Vertex>& v) { return v ? json(*v + 1) : json(nullptr); };
  json j{{"vertices", r.vertices},
         {"edges", r.edges},
         {"connected", r.connected},
         {"diameter", opt(r.diameter)},
         {"bipartite", sides(r.bipartite)},
         {"split", sides(r.split)},
         {"chordal", r.chordal},
         {"max_induced_star", opt(r.max_induced_star)},
         {"star_center_bipartite", json::array({id(r.star_center_bipartite_first), id(r.star_center_bipartite_second)})},
         {"star_center_biclique", id(r.star_center_biclique)},
         {"star_center_independent", id(r.star_center_independent)}};
  j["claw_free_bipartite"] = r.claw_shape ? json(to_string(*r.claw_shape)) : json(nullptr);
  j["bisplit"] = r.bisplit ? partition_to_json(*r.bisplit) : json(nullptr);
  j["trisplit"] = r.trisplit ? partition_to_json(*r.trisplit) : json(nullptr);
  return j;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace splitlike
