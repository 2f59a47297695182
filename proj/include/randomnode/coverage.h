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

#ifndef RANDOMNODE_COVERAGE_H_
#define RANDOMNODE_COVERAGE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/merge.h"
#include "randomnode/random_walk.h"

namespace randomnode {

struct CoverageReport {
  // Fraction of directed edges with both endpoints in one cluster.
  double coverage = 1.0;
  std::size_t n_links = 0;
  std::size_t incluster = 0;
  std::size_t n_clusters = 0;
  std::size_t max_size = 0;
  std::size_t unassigned = 0;
  std::optional<std::string> query;

  std::size_t intercluster() const { return n_links - incluster; }
};

// Unassigned nodes count as singletons. An edgeless graph has coverage 1.
// Fails if the clustering names a node outside the graph or a node twice.
absl::StatusOr<double> Coverage(const LinkGraph& graph,
                                const Clustering& clustering);

absl::StatusOr<CoverageReport> Report(
    const LinkGraph& graph, const Clustering& clustering,
    std::optional<std::string> query = std::nullopt);

struct SweepRow {
  std::string query;
  double k = 0.0;
  std::size_t trial = 0;
  double coverage = 0.0;
  std::size_t n_clusters = 0;
  std::size_t max_size = 0;

  bool operator==(const SweepRow&) const = default;
};

// Seed for one (query, k, trial) run of a sweep.
std::uint64_t SweepSeed(std::uint64_t seed, const std::string& query, double k,
                        std::size_t trial);

// Clusters every subgraph once per (k, trial) with `base` as the template
// config; base.seed is replaced by SweepSeed(seed, ...). Rows are ordered by
// subgraph, then k, then trial. An empty subgraph yields coverage 1 and no
// clusters. base.threads sets how many rows run concurrently.
absl::StatusOr<std::vector<SweepRow>> SweepK(
    std::span<const QueryInducedSubgraph> subgraphs,
    std::span<const double> k_values, std::size_t trials, std::uint64_t seed,
    const WalkConfig& base = {});

// `query,k,trial,coverage,n_clusters,max_size` header plus one line per row.
void WriteSweepCsv(std::span<const SweepRow> rows, std::ostream& out);

// Shortest decimal text that round-trips the double.
std::string FormatDouble(double value);

}  // namespace randomnode

#endif  // RANDOMNODE_COVERAGE_H_
