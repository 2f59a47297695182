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

#include "randomnode/reference_merge.h"

#include <cmath>
#include <cstdint>
#include <vector>

namespace randomnode {
namespace {

enum class SlotState { kPending, kAccepted, kAbsorbed, kEmptied };

std::uint64_t RowMax(const std::vector<std::uint64_t>& row) {
  std::uint64_t m = 0;
  for (std::uint64_t c : row) m = c > m ? c : m;
  return m;
}

}  // namespace

Clustering ReferenceMerge(std::span<const Walk> walks, double t_cm,
                          std::size_t node_count) {
  // Slot s holds walk order[s]; row s is its dense count vector.
  const std::vector<std::size_t> order = MergeOrder(walks);
  const std::size_t slots = order.size();
  std::vector<std::vector<std::uint64_t>> rows(
      slots, std::vector<std::uint64_t>(node_count, 0));
  for (std::size_t s = 0; s < slots; ++s) {
    for (const auto& [node, count] : walks[order[s]].visits) {
      rows[s][node] += count;
    }
  }
  std::vector<SlotState> state(slots, SlotState::kPending);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < slots && !changed; ++i) {
      if (state[i] != SlotState::kPending) continue;
      // Earlier pending slots would have been resolved on a previous sweep.
      for (std::size_t j = 0; j < i && !changed; ++j) {
        if (state[j] != SlotState::kAccepted) continue;
        const std::uint64_t max_i = RowMax(rows[i]);
        const std::uint64_t max_j = RowMax(rows[j]);
        bool merge = false;
        bool any_cut = false;
        std::vector<bool> cut(node_count, false);
        for (std::size_t u = 0; u < node_count; ++u) {
          if (rows[i][u] == 0 || rows[j][u] == 0) continue;
          const double nw = NormalizedVisits(rows[i][u], max_i);
          const double nc = NormalizedVisits(rows[j][u], max_j);
          if (nw >= 1.0 - t_cm && nc >= 1.0 - t_cm && std::abs(nw - nc) < t_cm) {
            merge = true;
          }
          if (nc - nw >= t_cm) {
            cut[u] = true;
            any_cut = true;
          }
        }
        if (merge) {
          for (std::size_t u = 0; u < node_count; ++u) rows[j][u] += rows[i][u];
          state[i] = SlotState::kAbsorbed;
          changed = true;
        } else if (any_cut) {
          for (std::size_t u = 0; u < node_count; ++u) {
            if (cut[u]) rows[i][u] = 0;
          }
          if (RowMax(rows[i]) == 0) state[i] = SlotState::kEmptied;
          changed = true;
        }
      }
      if (!changed && state[i] == SlotState::kPending) {
        if (RowMax(rows[i]) == 0) {
          state[i] = SlotState::kEmptied;
        } else {
          state[i] = SlotState::kAccepted;
        }
        changed = true;
      }
    }
  }

  // Ownership: largest raw count, earliest accepted slot on ties.
  std::vector<std::size_t> accepted;
  for (std::size_t s = 0; s < slots; ++s) {
    if (state[s] == SlotState::kAccepted) accepted.push_back(s);
  }
  std::vector<Cluster> clusters(accepted.size());
  Clustering result;
  for (std::size_t u = 0; u < node_count; ++u) {
    std::size_t best = accepted.size();
    std::uint64_t best_count = 0;
    for (std::size_t a = 0; a < accepted.size(); ++a) {
      const std::uint64_t count = rows[accepted[a]][u];
      if (count > best_count) {
        best = a;
        best_count = count;
      }
    }
    if (best == accepted.size()) {
      result.unassigned.push_back(static_cast<NodeId>(u));
    } else {
      clusters[best].nodes.push_back(static_cast<NodeId>(u));
      clusters[best].visits.push_back(best_count);
    }
  }
  for (Cluster& c : clusters) {
    if (c.nodes.empty()) continue;
    std::size_t top = 0;
    for (std::size_t m = 1; m < c.visits.size(); ++m) {
      if (c.visits[m] > c.visits[top]) top = m;
    }
    c.pivot = c.nodes[top];
    result.clusters.push_back(std::move(c));
  }
  return result;
}

}  // namespace randomnode
