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

#ifndef RANDOMNODE_TEXT_INDEX_H_
#define RANDOMNODE_TEXT_INDEX_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"

namespace randomnode {

// A document shares its id with the graph node it lives at.
struct Document {
  NodeId id = 0;
  std::string url;
  std::string text;

  bool operator==(const Document&) const = default;
};

// Splits UTF-8 text into maximal runs of Unicode letters and digits,
// lowercased. Everything else, including invalid UTF-8, separates terms.
std::vector<std::string> Tokenize(std::string_view text);

class InvertedIndex {
 public:
  // Fails on a repeated document id.
  static absl::StatusOr<InvertedIndex> Build(std::span<const Document> docs);

  // Ascending doc ids containing `term`; empty for unknown terms.
  std::span<const NodeId> Postings(std::string_view term) const;

  std::size_t DocCount() const { return doc_count_; }
  std::size_t TermCount() const { return postings_.size(); }

  // Terms ordered by document frequency (descending), then lexicographically.
  std::vector<std::pair<std::string, std::size_t>> TermsByFrequency(
      std::size_t limit) const;

 private:
  absl::flat_hash_map<std::string, std::vector<NodeId>> postings_;
  std::size_t doc_count_ = 0;
};

// Conjunctive match: documents containing every distinct term of `query`.
// A query without terms matches nothing.
std::vector<NodeId> MatchQuery(const InvertedIndex& index,
                               std::string_view query);

// Newline-delimited JSON, one {"id","url","text"} object per line.
absl::StatusOr<std::vector<Document>> LoadCorpus(std::istream& in);
absl::StatusOr<std::vector<Document>> LoadCorpusFile(const std::string& path);
void WriteCorpus(std::span<const Document> docs, std::ostream& out);

}  // namespace randomnode

#endif  // RANDOMNODE_TEXT_INDEX_H_
