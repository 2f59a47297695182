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

#include "randomnode/merge.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <tuple>
#include <utility>

#include "absl/container/flat_hash_map.h"

namespace randomnode {
namespace {

using Counts = std::vector<std::pair<NodeId, std::uint64_t>>;

struct OpenCluster {
  absl::flat_hash_map<NodeId, std::uint64_t> counts;
  std::uint64_t max_count = 0;
};

std::uint64_t MaxCount(const Counts& counts) {
  std::uint64_t m = 0;
  for (const auto& [node, count] : counts) m = std::max(m, count);
  return m;
}

class Merger {
 public:
  Merger(double t_cm, std::size_t node_count)
      : t_cm_(t_cm), owners_(node_count) {}

  void Add(Counts walk) {
    while (!walk.empty()) {
      const std::uint64_t walk_max = MaxCount(walk);
      // Visit shared (cluster, walk position) pairs in cluster acceptance
      // order with a k-way merge over the owner lists, so a walk that merges
      // early never touches the rest of its candidates.
      heap_.clear();
      for (std::uint32_t i = 0; i < walk.size(); ++i) {
        const auto& holders = owners_[walk[i].first];
        if (!holders.empty()) heap_.push_back({holders[0], i, 0});
      }
      std::make_heap(heap_.begin(), heap_.end(), std::greater<>());
      bool restart = false;
      while (!heap_.empty() && !restart) {
        const std::uint32_t c = std::get<0>(heap_.front());
        group_.clear();
        while (!heap_.empty() && std::get<0>(heap_.front()) == c) {
          std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
          auto [cc, pos, idx] = heap_.back();
          heap_.pop_back();
          group_.push_back(pos);
          const auto& holders = owners_[walk[pos].first];
          if (idx + 1 < holders.size()) {
            heap_.push_back({holders[idx + 1], pos, idx + 1});
            std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
          }
        }
        const OpenCluster& cluster = clusters_[c];
        cut_.clear();
        for (std::uint32_t pos : group_) {
          const auto& [node, count] = walk[pos];
          const double nw = NormalizedVisits(count, walk_max);
          const double nc =
              NormalizedVisits(cluster.counts.at(node), cluster.max_count);
          if (nw >= 1.0 - t_cm_ && nc >= 1.0 - t_cm_ &&
              std::abs(nw - nc) < t_cm_) {
            Absorb(c, walk);
            return;
          }
          if (nc - nw >= t_cm_) cut_.push_back(pos);
        }
        if (!cut_.empty()) {
          // cut_ holds ascending walk positions.
          std::size_t next = 0, out = 0;
          for (std::uint32_t i = 0; i < walk.size(); ++i) {
            if (next < cut_.size() && cut_[next] == i) {
              ++next;
              continue;
            }
            walk[out++] = walk[i];
          }
          walk.resize(out);
          restart = true;
        }
      }
      if (!restart) {
        clusters_.emplace_back();
        Absorb(static_cast<std::uint32_t>(clusters_.size() - 1), walk);
        return;
      }
    }
  }

  Clustering Finish() && {
    const std::size_t node_count = owners_.size();
    std::vector<Cluster> final_clusters(clusters_.size());
    Clustering result;
    for (NodeId v = 0; v < node_count; ++v) {
      const auto& holders = owners_[v];
      if (holders.empty()) {
        result.unassigned.push_back(v);
        continue;
      }
      // Holders are ascending, so strict '>' keeps the lower index on ties.
      std::uint32_t best = holders.front();
      std::uint64_t best_count = clusters_[best].counts.at(v);
      for (std::uint32_t c : holders) {
        const std::uint64_t count = clusters_[c].counts.at(v);
        if (count > best_count) {
          best = c;
          best_count = count;
        }
      }
      final_clusters[best].nodes.push_back(v);
      final_clusters[best].visits.push_back(best_count);
    }
    for (Cluster& c : final_clusters) {
      if (c.nodes.empty()) continue;
      const auto top = std::max_element(c.visits.begin(), c.visits.end());
      c.pivot = c.nodes[top - c.visits.begin()];
      result.clusters.push_back(std::move(c));
    }
    return result;
  }

 private:
  void Absorb(std::uint32_t c, const Counts& walk) {
    OpenCluster& cluster = clusters_[c];
    for (const auto& [node, count] : walk) {
      auto [it, inserted] = cluster.counts.try_emplace(node, 0);
      it->second += count;
      cluster.max_count = std::max(cluster.max_count, it->second);
      if (inserted) {
        // Merging into an older cluster lands mid-list.
        auto& holders = owners_[node];
        holders.insert(std::lower_bound(holders.begin(), holders.end(), c), c);
      }
    }
  }

  double t_cm_;
  std::vector<OpenCluster> clusters_;
  // Indices of the open clusters containing each node, ascending.
  std::vector<std::vector<std::uint32_t>> owners_;
  // (cluster, walk position, index into that node's owner list).
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> heap_;
  std::vector<std::uint32_t> group_;
  std::vector<std::uint32_t> cut_;
};

}  // namespace

std::vector<std::int64_t> Clustering::Labels(std::size_t node_count) const {
  std::vector<std::int64_t> labels(node_count, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (NodeId v : clusters[c].nodes) {
      if (v < node_count) labels[v] = static_cast<std::int64_t>(c);
    }
  }
  return labels;
}

std::vector<std::size_t> MergeOrder(std::span<const Walk> walks) {
  std::vector<std::uint64_t> totals(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    totals[i] = walks[i].TotalVisits();
  }
  std::vector<std::size_t> order(walks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (walks[a].length != walks[b].length) {
      return walks[a].length > walks[b].length;
    }
    if (totals[a] != totals[b]) return totals[a] > totals[b];
    return a < b;
  });
  return order;
}

Clustering MergePhase(std::span<const Walk> walks, double t_cm,
                      std::size_t node_count) {
  Merger merger(t_cm, node_count);
  for (std::size_t i : MergeOrder(walks)) {
    Counts counts;
    counts.reserve(walks[i].visits.size());
    for (const auto& [node, count] : walks[i].visits) {
      counts.emplace_back(node, count);
    }
    merger.Add(std::move(counts));
  }
  return std::move(merger).Finish();
}

absl::StatusOr<Clustering> ClusterGraph(const LinkGraph& graph,
                                        const WalkConfig& config) {
  absl::StatusOr<std::vector<Walk>> walks = WalkPhase(graph, config);
  if (!walks.ok()) return walks.status();
  return MergePhase(*walks, config.t_cm, graph.NodeCount());
}

}  // namespace randomnode
