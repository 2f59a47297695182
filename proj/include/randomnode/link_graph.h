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

#ifndef RANDOMNODE_LINK_GRAPH_H_
#define RANDOMNODE_LINK_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace randomnode {

using NodeId = std::uint32_t;

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  auto operator<=>(const Edge&) const = default;
};

enum class DegreeMode { kIn, kOut, kTotal };

absl::StatusOr<DegreeMode> ParseDegreeMode(std::string_view name);
const char* DegreeModeName(DegreeMode mode);

// Directed hyperlink graph in compressed sparse row form. Immutable once
// built. Adjacency lists are sorted ascending and contain neither self-loops
// nor duplicate targets, so two graphs built from the same edge set compare
// equal.
class LinkGraph {
 public:
  LinkGraph() : offsets_(1, 0) {}

  // Builds the canonical graph over nodes [0, node_count). Self-loops and
  // repeated pairs are dropped; their number is written to `dropped` when
  // non-null. Every endpoint must be < node_count.
  static LinkGraph FromEdges(std::size_t node_count, std::span<const Edge> edges,
                             std::size_t* dropped = nullptr);

  std::size_t NodeCount() const { return offsets_.size() - 1; }
  std::size_t EdgeCount() const { return targets_.size(); }

  std::span<const NodeId> OutNeighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t OutDegree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::uint32_t InDegree(NodeId v) const { return in_degree_[v]; }

  bool HasEdge(NodeId src, NodeId dst) const;

  // All edges in (src, dst) lexicographic order.
  std::vector<Edge> Edges() const;

  bool operator==(const LinkGraph&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::uint32_t> in_degree_;
};

struct EdgeListLoad {
  LinkGraph graph;
  std::size_t dropped_edges = 0;
};

// Parses `src<TAB>dst` lines. Blank lines and lines starting with '#' are
// skipped. The node count is 1 + the largest id seen unless `node_count` is
// given, in which case it must cover every id.
absl::StatusOr<EdgeListLoad> LoadEdges(
    std::istream& in, std::optional<std::size_t> node_count = std::nullopt);
absl::StatusOr<EdgeListLoad> LoadEdgesFile(
    const std::string& path,
    std::optional<std::size_t> node_count = std::nullopt);

// Writes the canonical edge list, one `src<TAB>dst` line per edge.
void WriteEdges(const LinkGraph& graph, std::ostream& out);

// The subgraph induced by the documents matching a query. Local node i
// corresponds to global node to_global[i].
struct QueryInducedSubgraph {
  LinkGraph graph;
  std::vector<NodeId> to_global;
  std::string query;

  std::optional<NodeId> ToLocal(NodeId global) const;
};

// Restricts `graph` to `nodes` (any order, repeats ignored) and the edges
// among them. Local ids follow ascending global id.
absl::StatusOr<QueryInducedSubgraph> InduceSubgraph(const LinkGraph& graph,
                                                    std::span<const NodeId> nodes,
                                                    std::string query = "");

absl::StatusOr<std::uint32_t> Degree(const LinkGraph& graph, NodeId v,
                                     DegreeMode mode);

struct DegreeHistogram {
  // degree value -> number of nodes with that degree
  std::map<std::uint32_t, std::size_t> counts;
  // per-node degree, indexed by node id
  std::vector<std::uint32_t> samples;
};

DegreeHistogram ComputeDegreeHistogram(const LinkGraph& graph, DegreeMode mode);

}  // namespace randomnode

#endif  // RANDOMNODE_LINK_GRAPH_H_
