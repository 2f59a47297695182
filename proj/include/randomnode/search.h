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

// Query-time pipeline shared by the HTTP service and the command line:
// match -> induce -> cluster -> report, plus degree statistics.

#ifndef RANDOMNODE_SEARCH_H_
#define RANDOMNODE_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "randomnode/coverage.h"
#include "randomnode/link_graph.h"
#include "randomnode/merge.h"
#include "randomnode/power_law.h"
#include "randomnode/random_walk.h"
#include "randomnode/snapshot.h"

namespace randomnode {

struct SearchParams {
  std::string query;
  double k = 0.5;
  double t_cm = 0.25;
  // Drawn at random (below 2^53, so it survives JSON) when absent.
  std::optional<std::uint64_t> seed;
  double max_walk_factor = 1.0;
  std::size_t limit = 50;
  unsigned threads = 1;
};

struct ResultCluster {
  // Global node ids, by descending visit count then ascending id; the pivot
  // comes first.
  std::vector<NodeId> members;
  NodeId pivot = 0;
};

struct SearchResult {
  std::string query;
  WalkConfig config;  // effective parameters, seed resolved
  CoverageReport report;
  // Largest first; ties keep merge order.
  std::vector<ResultCluster> clusters;
  std::vector<NodeId> unassigned;  // global ids, ascending
};

absl::StatusOr<SearchResult> RunSearch(const Snapshot& snapshot,
                                       const SearchParams& params);

// The /search response document.
nlohmann::ordered_json SearchResultJson(const Snapshot& snapshot,
                                        const SearchResult& result,
                                        std::size_t limit);

// At most 160 bytes of the document text, cut on a UTF-8 boundary.
std::string Snippet(const std::string& text);

struct StatsParams {
  std::optional<std::string> query;
  DegreeMode mode = DegreeMode::kIn;
  std::int64_t x_min = 1;
};

struct StatsResult {
  std::optional<std::string> query;
  DegreeMode mode = DegreeMode::kIn;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  DegreeHistogram histogram;
  std::optional<PowerLawFit> fit;
  std::string fit_failure;  // set when fit is absent
};

// Degree histogram and power-law fit of the full graph, or of the subgraph
// induced by `query` when one is given.
absl::StatusOr<StatsResult> RunStats(const Snapshot& snapshot,
                                     const StatsParams& params);

nlohmann::ordered_json StatsResultJson(const StatsResult& stats);

// Transport-independent request handling. Parameters arrive as raw strings;
// bad values produce 400 with {"error": ...}.
struct HttpReply {
  int status = 200;
  std::string body;
};

using QueryParams = std::map<std::string, std::string>;

HttpReply HandleHealth(const Snapshot& snapshot);
HttpReply HandleSearch(const Snapshot& snapshot, const QueryParams& params);
HttpReply HandleStats(const Snapshot& snapshot, const QueryParams& params);

}  // namespace randomnode

#endif  // RANDOMNODE_SEARCH_H_
