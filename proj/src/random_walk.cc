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

#include "randomnode/random_walk.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "absl/strings/str_cat.h"

namespace randomnode {
namespace {

constexpr std::uint64_t kStartNodeStream = ~std::uint64_t{0};

// Dense visit counters reused across walks on one thread.
class VisitScratch {
 public:
  explicit VisitScratch(std::size_t node_count) : counts_(node_count, 0) {}

  void Visit(NodeId v) {
    if (counts_[v]++ == 0) touched_.push_back(v);
  }

  std::vector<std::pair<NodeId, std::uint32_t>> Drain() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<std::pair<NodeId, std::uint32_t>> visits;
    visits.reserve(touched_.size());
    for (NodeId v : touched_) {
      visits.emplace_back(v, counts_[v]);
      counts_[v] = 0;
    }
    touched_.clear();
    return visits;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<NodeId> touched_;
};

Walk WalkWithScratch(const LinkGraph& graph, NodeId start,
                     std::uint64_t max_length, Rng& rng,
                     VisitScratch& scratch) {
  Walk walk;
  walk.start = start;
  NodeId current = start;
  scratch.Visit(current);
  while (true) {
    if (graph.OutDegree(current) == 0) {
      walk.terminated = Termination::kStoppingState;
      break;
    }
    if (walk.length >= max_length) {
      walk.terminated = Termination::kLengthCap;
      break;
    }
    current = *Step(graph, current, rng);
    scratch.Visit(current);
    ++walk.length;
  }
  walk.visits = scratch.Drain();
  return walk;
}

}  // namespace

absl::Status WalkConfig::Validate() const {
  if (!(k > 0.0 && k <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat("k must be in (0,1], got ", k));
  }
  if (!(max_walk_factor > 0.0) || !std::isfinite(max_walk_factor)) {
    return absl::InvalidArgumentError(
        absl::StrCat("max_walk_factor must be > 0, got ", max_walk_factor));
  }
  if (!(t_cm > 0.0 && t_cm <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("t_cm must be in (0,1], got ", t_cm));
  }
  return absl::OkStatus();
}

std::size_t WalkCount(const WalkConfig& config, std::size_t node_count) {
  if (node_count == 0) return 0;
  // The epsilon keeps products like 0.3 * 10 from rounding up to 4.
  const double raw = std::ceil(config.k * static_cast<double>(node_count) - 1e-9);
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(raw, 1.0)), 1,
                                 node_count);
}

std::uint64_t MaxWalkLength(const WalkConfig& config, std::size_t node_count) {
  const double raw =
      std::ceil(config.max_walk_factor * static_cast<double>(node_count) - 1e-9);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(raw));
}

const char* TerminationName(Termination t) {
  return t == Termination::kStoppingState ? "stopping_state" : "length_cap";
}

std::uint64_t Walk::TotalVisits() const {
  std::uint64_t total = 0;
  for (const auto& [node, count] : visits) total += count;
  return total;
}

std::optional<NodeId> Step(const LinkGraph& graph, NodeId v, Rng& rng) {
  auto nbrs = graph.OutNeighbors(v);
  if (nbrs.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, nbrs.size() - 1);
  return nbrs[pick(rng)];
}

Walk RandomWalk(const LinkGraph& graph, NodeId start, std::uint64_t max_length,
                Rng& rng) {
  VisitScratch scratch(graph.NodeCount());
  return WalkWithScratch(graph, start, max_length, rng, scratch);
}

absl::StatusOr<std::vector<Walk>> WalkPhase(const LinkGraph& graph,
                                            const WalkConfig& config) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  const std::size_t n = graph.NodeCount();
  if (n == 0) return absl::InvalidArgumentError("cannot walk an empty graph");

  std::vector<NodeId> starts(n);
  std::iota(starts.begin(), starts.end(), NodeId{0});
  Rng start_rng = MakeStream(config.seed, kStartNodeStream);
  std::shuffle(starts.begin(), starts.end(), start_rng);
  starts.resize(WalkCount(config, n));

  const std::uint64_t max_length = MaxWalkLength(config, n);
  std::vector<Walk> walks(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    VisitScratch scratch(n);
    for (std::size_t i = next++; i < walks.size(); i = next++) {
      Rng rng = MakeStream(config.seed, i);
      walks[i] = WalkWithScratch(graph, starts[i], max_length, rng, scratch);
    }
  };

  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency()
                                         : config.threads;
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(std::min<std::size_t>(
                                     walks.size(), 256)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return walks;
}

}  // namespace randomnode
