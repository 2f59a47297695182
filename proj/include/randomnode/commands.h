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

// Command implementations behind the `randomnode` tool. Each writes its
// report to `out` and returns a non-OK status on contract violations.

#ifndef RANDOMNODE_COMMANDS_H_
#define RANDOMNODE_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "randomnode/link_graph.h"
#include "randomnode/search.h"
#include "randomnode/snapshot.h"

namespace randomnode {

struct GenCommand {
  std::size_t nodes = 5000;
  double beta_in = 2.5;
  double beta_out = 2.5;
  std::int64_t x_min = 1;
  std::size_t vocab_size = 2000;
  double zipf_exponent = 1.0;
  bool anchor_text = true;
  std::uint64_t seed = 1;
  std::string out_dir;
};

// Writes edges.tsv and corpus.jsonl to out_dir.
absl::Status RunGen(const GenCommand& cmd, std::ostream& out);

absl::Status RunIngest(const std::string& edges_path,
                       const std::string& corpus_path,
                       const std::string& out_dir,
                       std::optional<std::size_t> node_count, std::ostream& out);

enum class OutputFormat { kText, kCsv, kJson };
absl::StatusOr<OutputFormat> ParseOutputFormat(const std::string& name);

struct FitCommand {
  std::optional<std::string> query;
  DegreeMode mode = DegreeMode::kIn;
  std::int64_t x_min = 1;
  OutputFormat format = OutputFormat::kText;
};

// Columns: median, mean, beta_hat, std_error, n.
absl::Status RunFit(const Snapshot& snapshot, const FitCommand& cmd,
                    std::ostream& out);

struct ClusterCommand {
  SearchParams params;
  // kJson prints exactly the /search response body.
  OutputFormat format = OutputFormat::kText;
};

// Text output: parameter line, a row of query, coverage, n.links, incluster,
// n.clusters, max.size, then the clusters with up to `limit` members each.
absl::Status RunCluster(const Snapshot& snapshot, const ClusterCommand& cmd,
                        std::ostream& out);

struct SweepCommand {
  // One query per line; when empty the `top_terms` most frequent terms are
  // used.
  std::vector<std::string> queries;
  std::size_t top_terms = 20;
  std::vector<double> k_values;  // default 0.1, 0.2, ..., 1.0
  std::size_t trials = 5;
  std::uint64_t seed = 1;
  double t_cm = 0.25;
  double max_walk_factor = 1.0;
  unsigned threads = 1;
};

std::vector<double> DefaultKGrid();

absl::Status RunSweep(const Snapshot& snapshot, const SweepCommand& cmd,
                      std::ostream& out);

absl::StatusOr<std::vector<std::string>> ReadQueriesFile(const std::string& path);

// "error: <CODE>: <message>" on one line.
std::string FormatError(const absl::Status& status);

}  // namespace randomnode

#endif  // RANDOMNODE_COMMANDS_H_
