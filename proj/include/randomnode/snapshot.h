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

// An ingested, immutable search snapshot. On disk it is a directory with
//
//   manifest.json   format version, counts and FNV-1a checksums
//   edges.tsv       canonical edge list (sorted, no loops or repeats)
//   corpus.jsonl    documents sorted by id
//
// Ingestion canonicalises both inputs, so ingesting the same data twice
// gives byte-identical files and the same manifest checksum.

#ifndef RANDOMNODE_SNAPSHOT_H_
#define RANDOMNODE_SNAPSHOT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/text_index.h"

namespace randomnode {

inline constexpr int kSnapshotFormatVersion = 1;

struct Manifest {
  int format_version = kSnapshotFormatVersion;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t documents = 0;
  std::size_t terms = 0;
  std::size_t dropped_edges = 0;
  std::uint64_t edges_checksum = 0;
  std::uint64_t corpus_checksum = 0;
  // Combined checksum of both data files.
  std::uint64_t checksum = 0;

  std::string ToJson() const;
  static absl::StatusOr<Manifest> FromJson(const std::string& text);

  bool operator==(const Manifest&) const = default;
};

struct Snapshot {
  LinkGraph graph;
  InvertedIndex index;
  // Sorted by id.
  std::vector<Document> docs;
  Manifest manifest;

  const Document* FindDoc(NodeId id) const;
};

// Every document id must be a graph node. Reports up to ten offenders.
absl::Status CheckConsistency(const LinkGraph& graph,
                              std::span<const Document> docs);

// Builds a snapshot from an edge list and a corpus and writes it to
// `out_dir` (created if missing). `node_count` overrides the inferred count.
absl::StatusOr<Manifest> IngestSnapshot(
    const std::string& edges_path, const std::string& corpus_path,
    const std::string& out_dir,
    std::optional<std::size_t> node_count = std::nullopt);

// Same, from in-memory data.
absl::StatusOr<Manifest> WriteSnapshot(const LinkGraph& graph,
                                       std::vector<Document> docs,
                                       const std::string& out_dir,
                                       std::size_t dropped_edges = 0);

// Loads and validates a snapshot directory: checksums, counts and id
// consistency.
absl::StatusOr<Snapshot> LoadSnapshot(const std::string& dir);

}  // namespace randomnode

#endif  // RANDOMNODE_SNAPSHOT_H_
