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

#include "randomnode/corpus_gen.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "randomnode/rng.h"

namespace randomnode {
namespace {

constexpr const char* kFixedWords[] = {
    "beograd",    "politika",   "pravda",   "rubrike",    "shop",
    "nekretnine", "leasing",    "dekanat",  "banking",    "expo",
    "filologija", "univerzitet", "fakultet", "vesti",     "sport",
    "kultura",    "ekonomija",  "muzika",   "film",       "zdravlje",
    "turizam",    "biblioteka", "studenti", "racunari",   "internet",
    "novosti",    "oglasi",     "posao",    "nauka",      "istorija",
};

}  // namespace

std::string VocabularyTerm(std::size_t rank) {
  constexpr std::size_t kFixed = std::size(kFixedWords);
  if (rank < kFixed) return kFixedWords[rank];
  return absl::StrCat("term", rank);
}

absl::StatusOr<std::vector<Document>> GenerateCorpus(
    const CorpusGenOptions& options) {
  if (options.vocab_size == 0) {
    return absl::InvalidArgumentError("vocabulary must not be empty");
  }
  if (options.min_terms == 0 || options.min_terms > options.max_terms) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad term count range [", options.min_terms, ", ",
                     options.max_terms, "]"));
  }
  if (!(options.zipf_exponent >= 0.0)) {
    return absl::InvalidArgumentError("zipf exponent must be >= 0");
  }

  std::vector<double> weights(options.vocab_size);
  for (std::size_t r = 0; r < weights.size(); ++r) {
    weights[r] = std::pow(static_cast<double>(r + 1), -options.zipf_exponent);
  }
  std::discrete_distribution<std::size_t> term_rank(weights.begin(),
                                                    weights.end());
  std::uniform_int_distribution<std::size_t> term_count(options.min_terms,
                                                        options.max_terms);
  Rng rng = MakeStream(options.seed, 0);

  std::vector<Document> docs(options.node_count);
  for (std::size_t id = 0; id < docs.size(); ++id) {
    Document& doc = docs[id];
    doc.id = static_cast<NodeId>(id);
    const std::size_t terms = term_count(rng);
    for (std::size_t t = 0; t < terms; ++t) {
      if (t > 0) doc.text += ' ';
      doc.text += VocabularyTerm(term_rank(rng));
    }
    doc.url = absl::StrCat("http://www.site", id % 997, ".yu/page/", id);
  }
  return docs;
}

absl::Status AppendAnchorText(const LinkGraph& graph,
                              std::span<Document> docs) {
  if (docs.size() != graph.NodeCount()) {
    return absl::InvalidArgumentError(
        absl::StrCat("corpus has ", docs.size(), " documents, graph has ",
                     graph.NodeCount(), " nodes"));
  }
  std::vector<std::vector<std::string>> own(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].id != i) {
      return absl::InvalidArgumentError(
          absl::StrCat("document at position ", i, " has id ", docs[i].id));
    }
    own[i] = Tokenize(docs[i].text);
    std::sort(own[i].begin(), own[i].end());
    own[i].erase(std::unique(own[i].begin(), own[i].end()), own[i].end());
  }
  std::vector<std::string> anchors, merged;
  for (NodeId u = 0; u < docs.size(); ++u) {
    anchors.clear();
    for (NodeId v : graph.OutNeighbors(u)) {
      merged.clear();
      std::set_union(anchors.begin(), anchors.end(), own[v].begin(),
                     own[v].end(), std::back_inserter(merged));
      anchors.swap(merged);
    }
    merged.clear();
    std::set_difference(anchors.begin(), anchors.end(), own[u].begin(),
                        own[u].end(), std::back_inserter(merged));
    if (merged.empty()) continue;
    docs[u].text += " |";
    for (const std::string& t : merged) absl::StrAppend(&docs[u].text, " ", t);
  }
  return absl::OkStatus();
}

}  // namespace randomnode
