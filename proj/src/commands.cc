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

#include "randomnode/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "randomnode/corpus_gen.h"
#include "randomnode/coverage.h"
#include "randomnode/power_law.h"
#include "randomnode/rng.h"
#include "randomnode/status_macros.h"

namespace randomnode {
namespace {

namespace fs = std::filesystem;

absl::Status WriteTo(const fs::path& path, auto&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  writer(out);
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path.string()));
  return absl::OkStatus();
}

}  // namespace

absl::Status RunGen(const GenCommand& cmd, std::ostream& out) {
  if (cmd.out_dir.empty()) return absl::InvalidArgumentError("--out is required");
  ASSIGN_OR_RETURN(LinkGraph graph,
                   GenerateGraph(GraphGenOptions{cmd.nodes, cmd.beta_in,
                                                 cmd.beta_out, cmd.x_min,
                                                 cmd.seed}));
  CorpusGenOptions corpus_options;
  corpus_options.node_count = cmd.nodes;
  corpus_options.vocab_size = cmd.vocab_size;
  corpus_options.zipf_exponent = cmd.zipf_exponent;
  corpus_options.seed = CombineSeed(cmd.seed, 0xC0);
  ASSIGN_OR_RETURN(std::vector<Document> docs, GenerateCorpus(corpus_options));
  if (cmd.anchor_text) RETURN_IF_ERROR(AppendAnchorText(graph, docs));

  std::error_code ec;
  fs::create_directories(cmd.out_dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot create ", cmd.out_dir, ": ", ec.message()));
  }
  const fs::path dir(cmd.out_dir);
  RETURN_IF_ERROR(WriteTo(dir / "edges.tsv", [&](std::ostream& os) {
    os << "# nodes=" << graph.NodeCount() << " beta_in=" << cmd.beta_in
       << " beta_out=" << cmd.beta_out << " seed=" << cmd.seed << "\n";
    WriteEdges(graph, os);
  }));
  RETURN_IF_ERROR(WriteTo(dir / "corpus.jsonl",
                          [&](std::ostream& os) { WriteCorpus(docs, os); }));
  out << "generated " << graph.NodeCount() << " nodes, " << graph.EdgeCount()
      << " edges, " << docs.size() << " documents in " << cmd.out_dir << "\n";
  return absl::OkStatus();
}

absl::Status RunIngest(const std::string& edges_path,
                       const std::string& corpus_path,
                       const std::string& out_dir,
                       std::optional<std::size_t> node_count,
                       std::ostream& out) {
  if (out_dir.empty()) return absl::InvalidArgumentError("--out is required");
  ASSIGN_OR_RETURN(Manifest manifest,
                   IngestSnapshot(edges_path, corpus_path, out_dir, node_count));
  out << manifest.ToJson();
  return absl::OkStatus();
}

absl::StatusOr<OutputFormat> ParseOutputFormat(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown format '", name, "' (want text|csv|json)"));
}

absl::Status RunFit(const Snapshot& snapshot, const FitCommand& cmd,
                    std::ostream& out) {
  ASSIGN_OR_RETURN(StatsResult stats,
                   RunStats(snapshot, StatsParams{cmd.query, cmd.mode, cmd.x_min}));
  const std::string label =
      cmd.query.has_value() ? absl::StrCat("induced subgraph (", *cmd.query, ")")
                            : std::string("full graph");
  if (cmd.format == OutputFormat::kJson) {
    out << StatsResultJson(stats).dump(2) << "\n";
    return absl::OkStatus();
  }
  if (!stats.fit.has_value()) {
    out << "no samples: " << label << " (" << DegreeModeName(cmd.mode)
        << "-degree, " << stats.nodes << " nodes): " << stats.fit_failure << "\n";
    return absl::OkStatus();
  }
  const PowerLawFit& fit = *stats.fit;
  if (cmd.format == OutputFormat::kCsv) {
    out << "graph,mode,median,mean,beta_hat,std_error,n\n";
    out << absl::StrFormat("%s,%s,%.2f,%.2f,%.6f,%.9f,%d\n", label,
                           DegreeModeName(cmd.mode), fit.median, fit.mean,
                           fit.beta_hat, fit.std_error, fit.n_samples);
    return absl::OkStatus();
  }
  out << absl::StrFormat("# %s-degree power-law fit, x_min=%d\n",
                         DegreeModeName(cmd.mode), fit.x_min);
  out << absl::StrFormat("%-28s %8s %10s %10s %13s %10s\n", "", "median",
                         "mean", "beta_hat", "std_error", "n");
  out << absl::StrFormat("%-28s %8.2f %10.2f %10.6f %13.9f %10d\n", label,
                         fit.median, fit.mean, fit.beta_hat, fit.std_error,
                         fit.n_samples);
  return absl::OkStatus();
}

absl::Status RunCluster(const Snapshot& snapshot, const ClusterCommand& cmd,
                        std::ostream& out) {
  ASSIGN_OR_RETURN(SearchResult result, RunSearch(snapshot, cmd.params));
  if (cmd.format == OutputFormat::kJson) {
    out << SearchResultJson(snapshot, result, cmd.params.limit)
               .dump(-1, ' ', false, nlohmann::json::error_handler_t::replace)
        << "\n";
    return absl::OkStatus();
  }
  const CoverageReport& r = result.report;
  if (cmd.format == OutputFormat::kCsv) {
    out << "query,coverage,n_links,incluster,n_clusters,max_size,seed\n";
    out << absl::StrFormat("%s,%s,%d,%d,%d,%d,%d\n", result.query,
                           FormatDouble(r.coverage), r.n_links, r.incluster,
                           r.n_clusters, r.max_size, result.config.seed);
    return absl::OkStatus();
  }
  out << absl::StrFormat("# k=%s tcm=%s seed=%d max_walk_factor=%s\n",
                         FormatDouble(result.config.k),
                         FormatDouble(result.config.t_cm), result.config.seed,
                         FormatDouble(result.config.max_walk_factor));
  out << absl::StrFormat("%-16s %9s %9s %10s %11s %9s\n", "query", "coverage",
                         "n.links", "incluster", "n.clusters", "max.size");
  out << absl::StrFormat("%-16s %9.3f %9d %10d %11d %9d\n", result.query,
                         r.coverage, r.n_links, r.incluster, r.n_clusters,
                         r.max_size);
  for (std::size_t c = 0; c < result.clusters.size(); ++c) {
    const ResultCluster& cluster = result.clusters[c];
    const Document* pivot = snapshot.FindDoc(cluster.pivot);
    out << absl::StrFormat("cluster %d size=%d pivot=%d %s\n", c,
                           cluster.members.size(), cluster.pivot,
                           pivot != nullptr ? pivot->url : "");
    for (std::size_t m = 0; m < cluster.members.size() && m < cmd.params.limit;
         ++m) {
      const Document* doc = snapshot.FindDoc(cluster.members[m]);
      out << absl::StrFormat("  %d %s\n", cluster.members[m],
                             doc != nullptr ? doc->url : "");
    }
  }
  out << absl::StrFormat("unassigned size=%d\n", result.unassigned.size());
  for (std::size_t m = 0; m < result.unassigned.size() && m < cmd.params.limit;
       ++m) {
    const Document* doc = snapshot.FindDoc(result.unassigned[m]);
    out << absl::StrFormat("  %d %s\n", result.unassigned[m],
                           doc != nullptr ? doc->url : "");
  }
  return absl::OkStatus();
}

std::vector<double> DefaultKGrid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

absl::Status RunSweep(const Snapshot& snapshot, const SweepCommand& cmd,
                      std::ostream& out) {
  std::vector<std::string> queries = cmd.queries;
  if (queries.empty()) {
    for (auto& [term, df] : snapshot.index.TermsByFrequency(cmd.top_terms)) {
      queries.push_back(term);
    }
  }
  std::vector<QueryInducedSubgraph> subgraphs;
  subgraphs.reserve(queries.size());
  for (const std::string& q : queries) {
    ASSIGN_OR_RETURN(QueryInducedSubgraph sub,
                     InduceSubgraph(snapshot.graph, MatchQuery(snapshot.index, q), q));
    subgraphs.push_back(std::move(sub));
  }
  const std::vector<double> k_values =
      cmd.k_values.empty() ? DefaultKGrid() : cmd.k_values;
  WalkConfig base;
  base.t_cm = cmd.t_cm;
  base.max_walk_factor = cmd.max_walk_factor;
  base.threads = cmd.threads;
  ASSIGN_OR_RETURN(std::vector<SweepRow> rows,
                   SweepK(subgraphs, k_values, cmd.trials, cmd.seed, base));
  WriteSweepCsv(rows, out);
  return absl::OkStatus();
}

absl::StatusOr<std::vector<std::string>> ReadQueriesFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<std::string> queries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    queries.push_back(line);
  }
  return queries;
}

std::string FormatError(const absl::Status& status) {
  return absl::StrCat("error: ", absl::StatusCodeToString(status.code()), ": ",
                      status.message());
}

}  // namespace randomnode
