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

#include "randomnode/search.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "randomnode/status_macros.h"
#include "randomnode/text_index.h"

namespace randomnode {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kJsonSafeSeedMask = (std::uint64_t{1} << 53) - 1;

bool IsBlank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

Json DocJson(const Snapshot& snapshot, NodeId id) {
  Json j;
  j["id"] = id;
  if (const Document* doc = snapshot.FindDoc(id)) {
    j["url"] = doc->url;
    j["snippet"] = Snippet(doc->text);
  } else {
    j["url"] = "";
    j["snippet"] = "";
  }
  return j;
}

Json DocListJson(const Snapshot& snapshot, const std::vector<NodeId>& ids,
                 std::size_t limit) {
  Json list = Json::array();
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) {
    list.push_back(DocJson(snapshot, ids[i]));
  }
  return list;
}

Json ErrorJson(std::string_view message) {
  Json j;
  j["error"] = message;
  return j;
}

HttpReply Reply(int status, const Json& body) {
  return {status, body.dump(-1, ' ', false, Json::error_handler_t::replace)};
}

HttpReply ErrorReply(const absl::Status& status) {
  const int code = status.code() == absl::StatusCode::kInvalidArgument ? 400 : 500;
  return Reply(code, ErrorJson(std::string(status.message())));
}

absl::StatusOr<double> ParseDouble(const std::string& key,
                                   const std::string& text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("parameter '", key, "' is not a number: '", text, "'"));
  }
  return value;
}

absl::StatusOr<std::uint64_t> ParseUnsigned(const std::string& key,
                                            const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "parameter '", key, "' is not a non-negative integer: '", text, "'"));
  }
  return value;
}

const std::string* Find(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  return it == params.end() ? nullptr : &it->second;
}

absl::StatusOr<SearchParams> ParseSearchParams(const QueryParams& raw) {
  SearchParams params;
  const std::string* q = Find(raw, "q");
  if (q == nullptr || IsBlank(*q)) {
    return absl::InvalidArgumentError("query parameter 'q' is required");
  }
  params.query = *q;
  if (const std::string* v = Find(raw, "k")) {
    ASSIGN_OR_RETURN(params.k, ParseDouble("k", *v));
  }
  if (const std::string* v = Find(raw, "tcm")) {
    ASSIGN_OR_RETURN(params.t_cm, ParseDouble("tcm", *v));
  }
  if (const std::string* v = Find(raw, "max_walk_factor")) {
    ASSIGN_OR_RETURN(params.max_walk_factor, ParseDouble("max_walk_factor", *v));
  }
  if (const std::string* v = Find(raw, "seed")) {
    ASSIGN_OR_RETURN(params.seed, ParseUnsigned("seed", *v));
  }
  if (const std::string* v = Find(raw, "limit")) {
    ASSIGN_OR_RETURN(params.limit, ParseUnsigned("limit", *v));
  }
  return params;
}

}  // namespace

std::string Snippet(const std::string& text) {
  constexpr std::size_t kMax = 160;
  if (text.size() <= kMax) return text;
  std::size_t cut = kMax;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return text.substr(0, cut);
}

absl::StatusOr<SearchResult> RunSearch(const Snapshot& snapshot,
                                       const SearchParams& params) {
  if (IsBlank(params.query)) {
    return absl::InvalidArgumentError("query must not be empty");
  }
  if (params.limit == 0) {
    return absl::InvalidArgumentError("limit must be >= 1");
  }
  SearchResult result;
  result.query = params.query;
  result.config.k = params.k;
  result.config.t_cm = params.t_cm;
  result.config.max_walk_factor = params.max_walk_factor;
  result.config.threads = params.threads;
  RETURN_IF_ERROR(result.config.Validate());
  if (params.seed.has_value()) {
    result.config.seed = *params.seed;
  } else {
    std::random_device device;
    result.config.seed =
        ((std::uint64_t{device()} << 32) | device()) & kJsonSafeSeedMask;
  }

  const std::vector<NodeId> matches = MatchQuery(snapshot.index, params.query);
  ASSIGN_OR_RETURN(QueryInducedSubgraph sub,
                   InduceSubgraph(snapshot.graph, matches, params.query));
  if (sub.graph.NodeCount() == 0) {
    result.report.query = params.query;
    return result;
  }
  ASSIGN_OR_RETURN(Clustering clustering, ClusterGraph(sub.graph, result.config));
  ASSIGN_OR_RETURN(result.report, Report(sub.graph, clustering, params.query));

  std::vector<std::size_t> order(clustering.clusters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return clustering.clusters[a].nodes.size() > clustering.clusters[b].nodes.size();
  });
  for (std::size_t c : order) {
    const Cluster& cluster = clustering.clusters[c];
    std::vector<std::size_t> by_visits(cluster.nodes.size());
    std::iota(by_visits.begin(), by_visits.end(), std::size_t{0});
    std::stable_sort(by_visits.begin(), by_visits.end(),
                     [&](std::size_t a, std::size_t b) {
                       return cluster.visits[a] > cluster.visits[b];
                     });
    ResultCluster out;
    out.pivot = sub.to_global[cluster.pivot];
    for (std::size_t m : by_visits) {
      out.members.push_back(sub.to_global[cluster.nodes[m]]);
    }
    result.clusters.push_back(std::move(out));
  }
  for (NodeId local : clustering.unassigned) {
    result.unassigned.push_back(sub.to_global[local]);
  }
  return result;
}

nlohmann::ordered_json SearchResultJson(const Snapshot& snapshot,
                                        const SearchResult& result,
                                        std::size_t limit) {
  Json j;
  j["query"] = result.query;
  Json& params = j["params"];
  params["k"] = result.config.k;
  params["tcm"] = result.config.t_cm;
  params["seed"] = result.config.seed;
  params["max_walk_factor"] = result.config.max_walk_factor;
  Json& report = j["coverage_report"];
  report["coverage"] = result.report.coverage;
  report["n_links"] = result.report.n_links;
  report["incluster"] = result.report.incluster;
  report["n_clusters"] = result.report.n_clusters;
  report["max_size"] = result.report.max_size;
  Json clusters = Json::array();
  for (std::size_t c = 0; c < result.clusters.size(); ++c) {
    const ResultCluster& cluster = result.clusters[c];
    Json entry;
    entry["id"] = c;
    entry["pivot_doc"] = DocJson(snapshot, cluster.pivot);
    entry["size"] = cluster.members.size();
    entry["docs"] = DocListJson(snapshot, cluster.members, limit);
    clusters.push_back(std::move(entry));
  }
  j["clusters"] = std::move(clusters);
  Json& unassigned = j["unassigned"];
  unassigned["size"] = result.unassigned.size();
  unassigned["docs"] = DocListJson(snapshot, result.unassigned, limit);
  return j;
}

absl::StatusOr<StatsResult> RunStats(const Snapshot& snapshot,
                                     const StatsParams& params) {
  if (params.x_min < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("xmin must be >= 1, got ", params.x_min));
  }
  StatsResult stats;
  stats.query = params.query;
  stats.mode = params.mode;
  const LinkGraph* graph = &snapshot.graph;
  QueryInducedSubgraph sub;
  if (params.query.has_value()) {
    const std::vector<NodeId> matches = MatchQuery(snapshot.index, *params.query);
    ASSIGN_OR_RETURN(sub, InduceSubgraph(snapshot.graph, matches, *params.query));
    graph = &sub.graph;
  }
  stats.nodes = graph->NodeCount();
  stats.edges = graph->EdgeCount();
  stats.histogram = ComputeDegreeHistogram(*graph, params.mode);
  absl::StatusOr<PowerLawFit> fit = FitBeta(
      std::span<const std::uint32_t>(stats.histogram.samples), params.x_min);
  if (fit.ok()) {
    stats.fit = *fit;
  } else {
    stats.fit_failure = std::string(fit.status().message());
  }
  return stats;
}

nlohmann::ordered_json StatsResultJson(const StatsResult& stats) {
  Json j;
  j["query"] = stats.query.has_value() ? Json(*stats.query) : Json(nullptr);
  j["mode"] = DegreeModeName(stats.mode);
  j["nodes"] = stats.nodes;
  j["edges"] = stats.edges;
  Json histogram = Json::array();
  for (const auto& [degree, count] : stats.histogram.counts) {
    histogram.push_back(Json::array({degree, count}));
  }
  j["histogram"] = std::move(histogram);
  if (stats.fit.has_value()) {
    Json& fit = j["fit"];
    fit["beta_hat"] = stats.fit->beta_hat;
    fit["x_min"] = stats.fit->x_min;
    fit["n"] = stats.fit->n_samples;
    fit["std_error"] = stats.fit->std_error;
    fit["median"] = stats.fit->median;
    fit["mean"] = stats.fit->mean;
  } else {
    j["fit"] = nullptr;
    j["reason"] = stats.fit_failure;
  }
  return j;
}

HttpReply HandleHealth(const Snapshot& snapshot) {
  Json j;
  j["status"] = "ok";
  j["nodes"] = snapshot.graph.NodeCount();
  j["edges"] = snapshot.graph.EdgeCount();
  return Reply(200, j);
}

HttpReply HandleSearch(const Snapshot& snapshot, const QueryParams& raw) {
  absl::StatusOr<SearchParams> params = ParseSearchParams(raw);
  if (!params.ok()) return ErrorReply(params.status());
  absl::StatusOr<SearchResult> result = RunSearch(snapshot, *params);
  if (!result.ok()) return ErrorReply(result.status());
  return Reply(200, SearchResultJson(snapshot, *result, params->limit));
}

HttpReply HandleStats(const Snapshot& snapshot, const QueryParams& raw) {
  StatsParams params;
  if (const std::string* q = Find(raw, "q"); q != nullptr && !IsBlank(*q)) {
    params.query = *q;
  }
  if (const std::string* mode = Find(raw, "mode")) {
    absl::StatusOr<DegreeMode> parsed = ParseDegreeMode(*mode);
    if (!parsed.ok()) return ErrorReply(parsed.status());
    params.mode = *parsed;
  }
  if (const std::string* xmin = Find(raw, "xmin")) {
    absl::StatusOr<std::uint64_t> parsed = ParseUnsigned("xmin", *xmin);
    if (!parsed.ok()) return ErrorReply(parsed.status());
    params.x_min = static_cast<std::int64_t>(*parsed);
  }
  absl::StatusOr<StatsResult> stats = RunStats(snapshot, params);
  if (!stats.ok()) return ErrorReply(stats.status());
  return Reply(200, StatsResultJson(*stats));
}

}  // namespace randomnode
