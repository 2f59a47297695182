// Copyright 2026 The randomnode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "randomnode/snapshot.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "json.hpp"
#include "randomnode/rng.h"
#include "randomnode/status_macros.h"

namespace randomnode {
namespace {

namespace fs = std::filesystem;

constexpr char kManifestFile[] = "manifest.json";
constexpr char kEdgesFile[] = "edges.tsv";
constexpr char kCorpusFile[] = "corpus.jsonl";

std::string Hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

absl::StatusOr<std::uint64_t> ParseHex(const std::string& s) {
  if (s.empty() || s.size() > 16 ||
      s.find_first_not_of("0123456789abcdef") != std::string::npos) {
    return absl::InvalidArgumentError(absl::StrCat("bad checksum '", s, "'"));
  }
  return std::stoull(s, nullptr, 16);
}

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

absl::Status WriteFile(const fs::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out << data;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  return absl::OkStatus();
}

std::uint64_t CombinedChecksum(std::uint64_t edges, std::uint64_t corpus) {
  return Fnv1a(absl::StrCat(Hex(edges), ":", Hex(corpus)));
}

}  // namespace

std::string Manifest::ToJson() const {
  nlohmann::ordered_json j;
  j["format_version"] = format_version;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["documents"] = documents;
  j["terms"] = terms;
  j["dropped_edges"] = dropped_edges;
  j["edges_checksum"] = Hex(edges_checksum);
  j["corpus_checksum"] = Hex(corpus_checksum);
  j["checksum"] = Hex(checksum);
  return j.dump(2) + "\n";
}

absl::StatusOr<Manifest> Manifest::FromJson(const std::string& text) {
  Manifest m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.format_version = j.at("format_version").get<int>();
    m.nodes = j.at("nodes").get<std::size_t>();
    m.edges = j.at("edges").get<std::size_t>();
    m.documents = j.at("documents").get<std::size_t>();
    m.terms = j.at("terms").get<std::size_t>();
    m.dropped_edges = j.value("dropped_edges", std::size_t{0});
    ASSIGN_OR_RETURN(m.edges_checksum,
                     ParseHex(j.at("edges_checksum").get<std::string>()));
    ASSIGN_OR_RETURN(m.corpus_checksum,
                     ParseHex(j.at("corpus_checksum").get<std::string>()));
    ASSIGN_OR_RETURN(m.checksum, ParseHex(j.at("checksum").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    return absl::DataLossError(absl::StrCat("manifest: ", e.what()));
  }
  if (m.format_version != kSnapshotFormatVersion) {
    return absl::FailedPreconditionError(
        absl::StrCat("unsupported snapshot format version ", m.format_version));
  }
  return m;
}

const Document* Snapshot::FindDoc(NodeId id) const {
  auto it = std::lower_bound(
      docs.begin(), docs.end(), id,
      [](const Document& d, NodeId value) { return d.id < value; });
  if (it == docs.end() || it->id != id) return nullptr;
  return &*it;
}

absl::Status CheckConsistency(const LinkGraph& graph,
                              std::span<const Document> docs) {
  std::vector<NodeId> offenders;
  std::size_t bad = 0;
  for (const Document& d : docs) {
    if (d.id >= graph.NodeCount()) {
      if (offenders.size() < 10) offenders.push_back(d.id);
      ++bad;
    }
  }
  if (bad == 0) return absl::OkStatus();
  return absl::FailedPreconditionError(absl::StrCat(
      bad, " document id(s) outside the graph (N=", graph.NodeCount(),
      "): ", absl::StrJoin(offenders, ","), bad > offenders.size() ? ",..." : ""));
}

absl::StatusOr<Manifest> WriteSnapshot(const LinkGraph& graph,
                                       std::vector<Document> docs,
                                       const std::string& out_dir,
                                       std::size_t dropped_edges) {
  std::sort(docs.begin(), docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  RETURN_IF_ERROR(CheckConsistency(graph, docs));
  ASSIGN_OR_RETURN(InvertedIndex index, InvertedIndex::Build(docs));

  std::ostringstream edges_text;
  WriteEdges(graph, edges_text);
  std::ostringstream corpus_text;
  WriteCorpus(docs, corpus_text);

  Manifest m;
  m.nodes = graph.NodeCount();
  m.edges = graph.EdgeCount();
  m.documents = docs.size();
  m.terms = index.TermCount();
  m.dropped_edges = dropped_edges;
  m.edges_checksum = Fnv1a(edges_text.str());
  m.corpus_checksum = Fnv1a(corpus_text.str());
  m.checksum = CombinedChecksum(m.edges_checksum, m.corpus_checksum);

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", out_dir, ": ", ec.message()));
  }
  const fs::path dir(out_dir);
  RETURN_IF_ERROR(WriteFile(dir / kEdgesFile, edges_text.str()));
  RETURN_IF_ERROR(WriteFile(dir / kCorpusFile, corpus_text.str()));
  RETURN_IF_ERROR(WriteFile(dir / kManifestFile, m.ToJson()));
  return m;
}

absl::StatusOr<Manifest> IngestSnapshot(const std::string& edges_path,
                                        const std::string& corpus_path,
                                        const std::string& out_dir,
                                        std::optional<std::size_t> node_count) {
  ASSIGN_OR_RETURN(EdgeListLoad loaded, LoadEdgesFile(edges_path, node_count));
  ASSIGN_OR_RETURN(std::vector<Document> docs, LoadCorpusFile(corpus_path));
  return WriteSnapshot(loaded.graph, std::move(docs), out_dir,
                       loaded.dropped_edges);
}

absl::StatusOr<Snapshot> LoadSnapshot(const std::string& dir) {
  const fs::path root(dir);
  if (!fs::is_directory(root)) {
    return absl::NotFoundError(absl::StrCat("snapshot directory ", dir,
                                            " does not exist"));
  }
  Snapshot snap;
  ASSIGN_OR_RETURN(std::string manifest_text, ReadFile(root / kManifestFile));
  ASSIGN_OR_RETURN(snap.manifest, Manifest::FromJson(manifest_text));
  ASSIGN_OR_RETURN(std::string edges_text, ReadFile(root / kEdgesFile));
  ASSIGN_OR_RETURN(std::string corpus_text, ReadFile(root / kCorpusFile));

  if (Fnv1a(edges_text) != snap.manifest.edges_checksum) {
    return absl::DataLossError(absl::StrCat(kEdgesFile, " checksum mismatch"));
  }
  if (Fnv1a(corpus_text) != snap.manifest.corpus_checksum) {
    return absl::DataLossError(absl::StrCat(kCorpusFile, " checksum mismatch"));
  }
  if (CombinedChecksum(snap.manifest.edges_checksum,
                       snap.manifest.corpus_checksum) != snap.manifest.checksum) {
    return absl::DataLossError("manifest checksum mismatch");
  }

  std::istringstream edges_in(edges_text);
  ASSIGN_OR_RETURN(EdgeListLoad loaded, LoadEdges(edges_in, snap.manifest.nodes));
  snap.graph = std::move(loaded.graph);
  std::istringstream corpus_in(corpus_text);
  ASSIGN_OR_RETURN(snap.docs, LoadCorpus(corpus_in));
  std::sort(snap.docs.begin(), snap.docs.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  RETURN_IF_ERROR(CheckConsistency(snap.graph, snap.docs));
  ASSIGN_OR_RETURN(snap.index, InvertedIndex::Build(snap.docs));

  if (snap.graph.EdgeCount() != snap.manifest.edges ||
      snap.docs.size() != snap.manifest.documents ||
      snap.index.TermCount() != snap.manifest.terms) {
    return absl::DataLossError("snapshot contents disagree with manifest counts");
  }
  return snap;
}

}  // namespace randomnode
