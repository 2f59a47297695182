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

#include "randomnode/coverage.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <ostream>
#include <thread>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "randomnode/rng.h"

namespace randomnode {
namespace {

absl::StatusOr<std::vector<std::int64_t>> CheckedLabels(
    const LinkGraph& graph, const Clustering& clustering) {
  std::vector<std::int64_t> labels(graph.NodeCount(), -1);
  for (std::size_t c = 0; c < clustering.clusters.size(); ++c) {
    for (NodeId v : clustering.clusters[c].nodes) {
      if (v >= graph.NodeCount()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "cluster ", c, " names node ", v, " outside the graph (N=",
            graph.NodeCount(), ")"));
      }
      if (labels[v] != -1) {
        return absl::InvalidArgumentError(
            absl::StrCat("node ", v, " appears in clusters ", labels[v],
                         " and ", c));
      }
      labels[v] = static_cast<std::int64_t>(c);
    }
  }
  for (NodeId v : clustering.unassigned) {
    if (v >= graph.NodeCount()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unassigned node ", v, " outside the graph"));
    }
    if (labels[v] != -1) {
      return absl::InvalidArgumentError(absl::StrCat(
          "node ", v, " is both unassigned and in cluster ", labels[v]));
    }
  }
  return labels;
}

}  // namespace

absl::StatusOr<double> Coverage(const LinkGraph& graph,
                                const Clustering& clustering) {
  absl::StatusOr<CoverageReport> report = Report(graph, clustering);
  if (!report.ok()) return report.status();
  return report->coverage;
}

absl::StatusOr<CoverageReport> Report(const LinkGraph& graph,
                                      const Clustering& clustering,
                                      std::optional<std::string> query) {
  absl::StatusOr<std::vector<std::int64_t>> labels =
      CheckedLabels(graph, clustering);
  if (!labels.ok()) return labels.status();

  CoverageReport report;
  report.query = std::move(query);
  report.n_links = graph.EdgeCount();
  for (NodeId v = 0; v < graph.NodeCount(); ++v) {
    const std::int64_t label = (*labels)[v];
    if (label < 0) continue;
    for (NodeId w : graph.OutNeighbors(v)) {
      if ((*labels)[w] == label) ++report.incluster;
    }
  }
  report.coverage = report.n_links == 0
                        ? 1.0
                        : static_cast<double>(report.incluster) /
                              static_cast<double>(report.n_links);
  report.n_clusters = clustering.clusters.size();
  for (const Cluster& c : clustering.clusters) {
    report.max_size = std::max(report.max_size, c.nodes.size());
  }
  report.unassigned = static_cast<std::size_t>(
      std::count(labels->begin(), labels->end(), std::int64_t{-1}));
  return report;
}

std::uint64_t SweepSeed(std::uint64_t seed, const std::string& query, double k,
                        std::size_t trial) {
  std::uint64_t s = CombineSeed(seed, Fnv1a(query));
  s = CombineSeed(s, std::bit_cast<std::uint64_t>(k));
  return CombineSeed(s, trial);
}

absl::StatusOr<std::vector<SweepRow>> SweepK(
    std::span<const QueryInducedSubgraph> subgraphs,
    std::span<const double> k_values, std::size_t trials, std::uint64_t seed,
    const WalkConfig& base) {
  for (double k : k_values) {
    WalkConfig probe = base;
    probe.k = k;
    if (absl::Status s = probe.Validate(); !s.ok()) return s;
  }

  std::vector<SweepRow> rows;
  rows.reserve(subgraphs.size() * k_values.size() * trials);
  for (const QueryInducedSubgraph& sub : subgraphs) {
    for (double k : k_values) {
      for (std::size_t t = 0; t < trials; ++t) {
        rows.push_back({sub.query, k, t, 1.0, 0, 0});
      }
    }
  }

  const std::size_t per_subgraph = k_values.size() * trials;
  std::vector<absl::Status> errors(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < rows.size(); r = next++) {
      SweepRow& row = rows[r];
      const QueryInducedSubgraph& sub = subgraphs[r / per_subgraph];
      if (sub.graph.NodeCount() == 0) continue;
      WalkConfig config = base;
      config.k = row.k;
      config.threads = 1;
      config.seed = SweepSeed(seed, row.query, row.k, row.trial);
      absl::StatusOr<Clustering> clustering = ClusterGraph(sub.graph, config);
      if (!clustering.ok()) {
        errors[r] = clustering.status();
        continue;
      }
      absl::StatusOr<CoverageReport> report = Report(sub.graph, *clustering);
      if (!report.ok()) {
        errors[r] = report.status();
        continue;
      }
      row.coverage = report->coverage;
      row.n_clusters = report->n_clusters;
      row.max_size = report->max_size;
    }
  };
  unsigned threads =
      base.threads == 0 ? std::thread::hardware_concurrency() : base.threads;
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(std::max<std::size_t>(
                                          1, std::min<std::size_t>(rows.size(), 256)))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const absl::Status& s : errors) {
    if (!s.ok()) return s;
  }
  return rows;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void WriteSweepCsv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "query,k,trial,coverage,n_clusters,max_size\n";
  for (const SweepRow& row : rows) {
    std::string query = row.query;
    if (query.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : query) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      query = quoted + "\"";
    }
    out << query << ',' << FormatDouble(row.k) << ',' << row.trial << ','
        << FormatDouble(row.coverage) << ',' << row.n_clusters << ','
        << row.max_size << '\n';
  }
}

}  // namespace randomnode
