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

// Merge phase of random-walk clustering.
//
// Each walk is a partial set of nodes with visit counts. Counts are compared
// after normalising by the walk's (or cluster's) largest count, so
// nv(u) = visits(u) / max_visits lies in (0, 1].
//
// Walks are taken longest first (ties: more total visits, then input order).
// A walk w is held against the clusters accepted so far, in acceptance order:
//
//   MERGE  if some shared node u is a pivot of both sides, that is
//          nv_w(u) >= 1 - t_cm and nv_c(u) >= 1 - t_cm, and
//          |nv_w(u) - nv_c(u)| < t_cm. Counts of w are added into c and w is
//          done.
//   CUT    otherwise every shared u with nv_c(u) - nv_w(u) >= t_cm is removed
//          from w. Since removal can change w's normalisation, the scan
//          restarts from the first cluster.
//
// A walk that survives a full scan with nothing to merge or cut becomes a new
// cluster; a walk cut down to nothing is discarded. Nodes still held by more
// than one cluster at the end go to the cluster with the larger raw count
// (lower cluster index on ties). Nodes in no cluster are `unassigned`.

#ifndef RANDOMNODE_MERGE_H_
#define RANDOMNODE_MERGE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/random_walk.h"

namespace randomnode {

struct Cluster {
  // Ascending node ids with their accumulated visit counts.
  std::vector<NodeId> nodes;
  std::vector<std::uint64_t> visits;
  // Member with the largest count (smallest id on ties).
  NodeId pivot = 0;

  bool operator==(const Cluster&) const = default;
};

struct Clustering {
  std::vector<Cluster> clusters;
  // Ascending ids of nodes outside every cluster.
  std::vector<NodeId> unassigned;

  // Cluster index per node, -1 for unassigned. Sized to node_count.
  std::vector<std::int64_t> Labels(std::size_t node_count) const;

  bool operator==(const Clustering&) const = default;
};

// Slot order used by the merge: indices of `walks` sorted by descending
// length, descending total visits, ascending index.
std::vector<std::size_t> MergeOrder(std::span<const Walk> walks);

// Normalised count, shared by both merge implementations so that threshold
// comparisons round identically.
inline double NormalizedVisits(std::uint64_t count, std::uint64_t max_count) {
  return static_cast<double>(count) / static_cast<double>(max_count);
}

// Nodes referenced by walks must be < node_count.
Clustering MergePhase(std::span<const Walk> walks, double t_cm,
                      std::size_t node_count);

// WalkPhase followed by MergePhase.
absl::StatusOr<Clustering> ClusterGraph(const LinkGraph& graph,
                                        const WalkConfig& config);

}  // namespace randomnode

#endif  // RANDOMNODE_MERGE_H_
