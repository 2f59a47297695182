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

#ifndef RANDOMNODE_CORPUS_GEN_H_
#define RANDOMNODE_CORPUS_GEN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/text_index.h"

namespace randomnode {

struct CorpusGenOptions {
  std::size_t node_count = 1000;
  std::size_t vocab_size = 2000;
  // Term of rank r (0-based) is drawn with weight (r + 1)^-zipf_exponent.
  double zipf_exponent = 1.0;
  std::size_t min_terms = 5;
  std::size_t max_terms = 20;
  std::uint64_t seed = 1;
};

// Term of the given frequency rank. The first ranks are fixed words so that
// demo queries are stable; the rest are synthetic.
std::string VocabularyTerm(std::size_t rank);

// One document per node id 0..node_count-1, each with between min_terms and
// max_terms term draws (repeats allowed).
absl::StatusOr<std::vector<Document>> GenerateCorpus(
    const CorpusGenOptions& options);

// Anchor text: appends to each document the distinct terms of the documents
// it links to (as they were before this call). Afterwards every edge u->v
// has terms(v) a subset of terms(u), so a page matching a single-term query
// keeps all of its in-links inside that query's induced subgraph.
// docs[i].id must equal i.
absl::Status AppendAnchorText(const LinkGraph& graph, std::span<Document> docs);

}  // namespace randomnode

#endif  // RANDOMNODE_CORPUS_GEN_H_
