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

#ifndef RANDOMNODE_RANDOM_WALK_H_
#define RANDOMNODE_RANDOM_WALK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/rng.h"

namespace randomnode {

struct WalkConfig {
  // Approximation coefficient: ceil(k * N) walks are started.
  double k = 0.5;
  // Each walk stops after ceil(max_walk_factor * N) steps.
  double max_walk_factor = 1.0;
  // Cut/merge threshold on per-walk normalized visit counts.
  double t_cm = 0.25;
  std::uint64_t seed = 0;
  // Worker threads for the walk phase; 0 means hardware concurrency. Results
  // do not depend on this value.
  unsigned threads = 1;

  absl::Status Validate() const;
};

std::size_t WalkCount(const WalkConfig& config, std::size_t node_count);
std::uint64_t MaxWalkLength(const WalkConfig& config, std::size_t node_count);

enum class Termination { kStoppingState, kLengthCap };

const char* TerminationName(Termination t);

struct Walk {
  NodeId start = 0;
  // (node, visit count), ascending by node. Counts are positive.
  std::vector<std::pair<NodeId, std::uint32_t>> visits;
  std::uint64_t length = 0;
  Termination terminated = Termination::kStoppingState;

  std::uint64_t TotalVisits() const;
  bool operator==(const Walk&) const = default;
};

// Uniformly random out-neighbour of v, or nullopt when v has no out-links.
std::optional<NodeId> Step(const LinkGraph& graph, NodeId v, Rng& rng);

// Walks from `start`, counting every arrival (the start once before the first
// step), until a node without out-links is reached or `max_length` steps have
// been taken.
Walk RandomWalk(const LinkGraph& graph, NodeId start, std::uint64_t max_length,
                Rng& rng);

// Starts WalkCount() walks at distinct nodes drawn by a seeded shuffle. Walk i
// draws from stream i of config.seed.
absl::StatusOr<std::vector<Walk>> WalkPhase(const LinkGraph& graph,
                                            const WalkConfig& config);

}  // namespace randomnode

#endif  // RANDOMNODE_RANDOM_WALK_H_
