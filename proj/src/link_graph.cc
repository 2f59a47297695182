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

#include "randomnode/link_graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace randomnode {

absl::StatusOr<DegreeMode> ParseDegreeMode(std::string_view name) {
  if (name == "in") return DegreeMode::kIn;
  if (name == "out") return DegreeMode::kOut;
  if (name == "total") return DegreeMode::kTotal;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown degree mode '", std::string(name), "' (want in|out|total)"));
}

const char* DegreeModeName(DegreeMode mode) {
  switch (mode) {
    case DegreeMode::kIn:
      return "in";
    case DegreeMode::kOut:
      return "out";
    case DegreeMode::kTotal:
      return "total";
  }
  return "?";
}

LinkGraph LinkGraph::FromEdges(std::size_t node_count,
                               std::span<const Edge> edges,
                               std::size_t* dropped) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.src != e.dst) kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (dropped != nullptr) *dropped = edges.size() - kept.size();

  LinkGraph g;
  g.offsets_.assign(node_count + 1, 0);
  g.in_degree_.assign(node_count, 0);
  g.targets_.reserve(kept.size());
  for (const Edge& e : kept) {
    ++g.offsets_[e.src + 1];
    ++g.in_degree_[e.dst];
    g.targets_.push_back(e.dst);
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] += g.offsets_[v];
  }
  return g;
}

bool LinkGraph::HasEdge(NodeId src, NodeId dst) const {
  if (src >= NodeCount()) return false;
  auto nbrs = OutNeighbors(src);
  return std::binary_search(nbrs.begin(), nbrs.end(), dst);
}

std::vector<Edge> LinkGraph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(EdgeCount());
  for (NodeId v = 0; v < NodeCount(); ++v) {
    for (NodeId w : OutNeighbors(v)) edges.push_back({v, w});
  }
  return edges;
}

namespace {

bool ParseId(std::string_view token, NodeId& out) {
  if (token.empty()) return false;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::string_view NextToken(std::string_view& rest) {
  std::size_t begin = rest.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) {
    rest = {};
    return {};
  }
  rest.remove_prefix(begin);
  std::size_t end = rest.find_first_of(" \t\r");
  std::string_view token = rest.substr(0, end);
  rest.remove_prefix(end == std::string_view::npos ? rest.size() : end);
  return token;
}

}  // namespace

absl::StatusOr<EdgeListLoad> LoadEdges(std::istream& in,
                                       std::optional<std::size_t> node_count) {
  std::vector<Edge> edges;
  std::size_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view first = NextToken(rest);
    if (first.empty() || first.front() == '#') continue;
    std::string_view second = NextToken(rest);
    std::string_view extra = NextToken(rest);
    Edge e;
    if (!ParseId(first, e.src) || !ParseId(second, e.dst) || !extra.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected 'src<TAB>dst', got '",
                       line, "'"));
    }
    max_id_plus_one = std::max<std::size_t>(
        max_id_plus_one, static_cast<std::size_t>(std::max(e.src, e.dst)) + 1);
    edges.push_back(e);
  }
  std::size_t n = max_id_plus_one;
  if (node_count.has_value()) {
    if (*node_count < max_id_plus_one) {
      return absl::InvalidArgumentError(
          absl::StrCat("node count ", *node_count, " is smaller than max id + 1 (",
                       max_id_plus_one, ")"));
    }
    n = *node_count;
  }
  EdgeListLoad result;
  result.graph = LinkGraph::FromEdges(n, edges, &result.dropped_edges);
  return result;
}

absl::StatusOr<EdgeListLoad> LoadEdgesFile(
    const std::string& path, std::optional<std::size_t> node_count) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  auto loaded = LoadEdges(in, node_count);
  if (!loaded.ok()) {
    return absl::Status(loaded.status().code(),
                        absl::StrCat(path, ": ", loaded.status().message()));
  }
  return loaded;
}

void WriteEdges(const LinkGraph& graph, std::ostream& out) {
  for (NodeId v = 0; v < graph.NodeCount(); ++v) {
    for (NodeId w : graph.OutNeighbors(v)) out << v << '\t' << w << '\n';
  }
}

std::optional<NodeId> QueryInducedSubgraph::ToLocal(NodeId global) const {
  auto it = std::lower_bound(to_global.begin(), to_global.end(), global);
  if (it == to_global.end() || *it != global) return std::nullopt;
  return static_cast<NodeId>(it - to_global.begin());
}

absl::StatusOr<QueryInducedSubgraph> InduceSubgraph(
    const LinkGraph& graph, std::span<const NodeId> nodes, std::string query) {
  QueryInducedSubgraph sub;
  sub.query = std::move(query);
  sub.to_global.assign(nodes.begin(), nodes.end());
  std::sort(sub.to_global.begin(), sub.to_global.end());
  sub.to_global.erase(std::unique(sub.to_global.begin(), sub.to_global.end()),
                      sub.to_global.end());
  if (!sub.to_global.empty() && sub.to_global.back() >= graph.NodeCount()) {
    return absl::InvalidArgumentError(
        absl::StrCat("node ", sub.to_global.back(), " out of range (N=",
                     graph.NodeCount(), ")"));
  }

  std::vector<Edge> local_edges;
  for (NodeId local = 0; local < sub.to_global.size(); ++local) {
    for (NodeId target : graph.OutNeighbors(sub.to_global[local])) {
      if (auto t = sub.ToLocal(target)) local_edges.push_back({local, *t});
    }
  }
  sub.graph = LinkGraph::FromEdges(sub.to_global.size(), local_edges);
  return sub;
}

absl::StatusOr<std::uint32_t> Degree(const LinkGraph& graph, NodeId v,
                                     DegreeMode mode) {
  if (v >= graph.NodeCount()) {
    return absl::InvalidArgumentError(
        absl::StrCat("node ", v, " out of range (N=", graph.NodeCount(), ")"));
  }
  switch (mode) {
    case DegreeMode::kIn:
      return graph.InDegree(v);
    case DegreeMode::kOut:
      return graph.OutDegree(v);
    case DegreeMode::kTotal:
      return graph.InDegree(v) + graph.OutDegree(v);
  }
  return absl::InternalError("bad degree mode");
}

DegreeHistogram ComputeDegreeHistogram(const LinkGraph& graph,
                                       DegreeMode mode) {
  DegreeHistogram hist;
  hist.samples.resize(graph.NodeCount());
  for (NodeId v = 0; v < graph.NodeCount(); ++v) {
    std::uint32_t d = 0;
    if (mode != DegreeMode::kOut) d += graph.InDegree(v);
    if (mode != DegreeMode::kIn) d += graph.OutDegree(v);
    hist.samples[v] = d;
    ++hist.counts[d];
  }
  return hist;
}

}  // namespace randomnode
