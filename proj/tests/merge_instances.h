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

#ifndef RANDOMNODE_TESTS_MERGE_INSTANCES_H_
#define RANDOMNODE_TESTS_MERGE_INSTANCES_H_

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "randomnode/link_graph.h"
#include "randomnode/random_walk.h"
#include "randomnode/rng.h"

namespace randomnode {

inline Walk MakeWalk(NodeId start,
                     std::vector<std::pair<NodeId, std::uint32_t>> visits) {
  std::sort(visits.begin(), visits.end());
  Walk w;
  w.start = start;
  w.visits = std::move(visits);
  w.length = w.TotalVisits() - 1;
  return w;
}

// Random small instance: up to 8 walks over up to 12 nodes, some drawn from
// real walks on a random graph and some with arbitrary counts.
inline std::vector<Walk> RandomInstance(Rng& rng, std::size_t& node_count) {
  std::uniform_int_distribution<std::size_t> nodes_dist(1, 12);
  std::uniform_int_distribution<std::size_t> walks_dist(1, 8);
  node_count = nodes_dist(rng);
  const std::size_t walk_count = walks_dist(rng);
  std::vector<Walk> walks;
  if (std::bernoulli_distribution(0.5)(rng) && node_count >= 2) {
    std::vector<Edge> edges;
    std::bernoulli_distribution edge(0.25);
    for (NodeId s = 0; s < node_count; ++s) {
      for (NodeId t = 0; t < node_count; ++t) {
        if (s != t && edge(rng)) edges.push_back({s, t});
      }
    }
    LinkGraph g = LinkGraph::FromEdges(node_count, edges);
    std::uniform_int_distribution<NodeId> start(0, node_count - 1);
    for (std::size_t i = 0; i < walk_count; ++i) {
      walks.push_back(RandomWalk(g, start(rng), 3 * node_count, rng));
    }
    return walks;
  }
  std::uniform_int_distribution<std::uint32_t> count(1, 6);
  std::bernoulli_distribution present(0.4);
  for (std::size_t i = 0; i < walk_count; ++i) {
    std::vector<std::pair<NodeId, std::uint32_t>> visits;
    for (NodeId v = 0; v < node_count; ++v) {
      if (present(rng)) visits.push_back({v, count(rng)});
    }
    if (visits.empty()) visits.push_back({0, count(rng)});
    Walk w = MakeWalk(visits.front().first, visits);
    // Decouple length from total visits now and then to exercise the
    // ordering tie-breaks.
    if (std::bernoulli_distribution(0.3)(rng)) w.length = count(rng);
    walks.push_back(w);
  }
  return walks;
}

}  // namespace randomnode

#endif  // RANDOMNODE_TESTS_MERGE_INSTANCES_H_
