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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "randomnode/commands.h"
#include "randomnode/server.h"
#include "randomnode/snapshot.h"

namespace {

using randomnode::FormatError;

int Fail(const absl::Status& status) {
  std::cerr << FormatError(status) << "\n";
  return 1;
}

absl::StatusOr<randomnode::Snapshot> Open(const std::string& dir) {
  return randomnode::LoadSnapshot(dir);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"randomnode: query-time search result clustering by random walks"};
  app.require_subcommand(1);

  // gen
  randomnode::GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic edge list and corpus");
  gen_cmd->add_option("--nodes,-n", gen.nodes, "Node count")->capture_default_str();
  gen_cmd->add_option("--beta-in", gen.beta_in, "In-degree exponent")->capture_default_str();
  gen_cmd->add_option("--beta-out", gen.beta_out, "Out-degree exponent")->capture_default_str();
  gen_cmd->add_option("--xmin", gen.x_min, "Smallest drawn degree")->capture_default_str();
  gen_cmd->add_option("--vocab-size", gen.vocab_size, "Vocabulary size")->capture_default_str();
  gen_cmd->add_option("--zipf", gen.zipf_exponent, "Term rank-frequency exponent")
      ->capture_default_str();
  gen_cmd->add_option("--anchor-text", gen.anchor_text,
                      "Index pages under the terms of the pages they link to")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out_dir, "Output directory")->required();

  // ingest
  std::string edges_path, corpus_path, ingest_out;
  std::optional<std::size_t> ingest_nodes;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a snapshot directory");
  ingest_cmd->add_option("--edges", edges_path, "Edge list (src<TAB>dst)")->required();
  ingest_cmd->add_option("--corpus", corpus_path, "Corpus (JSON lines)")->required();
  ingest_cmd->add_option("--nodes", ingest_nodes, "Node count override");
  ingest_cmd->add_option("--out", ingest_out, "Snapshot directory")->required();

  // shared snapshot-consuming options
  std::string snapshot_dir;
  std::string format = "text";
  std::string mode = "in";
  std::int64_t xmin = 1;

  // fit
  std::optional<std::string> fit_query;
  auto* fit_cmd = app.add_subcommand("fit", "Power-law fit of the degree distribution");
  fit_cmd->add_option("--snapshot,-s", snapshot_dir, "Snapshot directory")->required();
  fit_cmd->add_option("--query,-q", fit_query, "Fit the subgraph induced by this query");
  fit_cmd->add_option("--mode", mode, "in|out|total")->capture_default_str();
  fit_cmd->add_option("--xmin", xmin, "Lower bound of the fit")->capture_default_str();
  fit_cmd->add_option("--format", format, "text|csv|json")->capture_default_str();

  // cluster
  randomnode::SearchParams search;
  std::optional<std::uint64_t> cluster_seed;
  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster the results of one query");
  cluster_cmd->add_option("--snapshot,-s", snapshot_dir, "Snapshot directory")->required();
  cluster_cmd->add_option("--query,-q", search.query, "Query")->required();
  cluster_cmd->add_option("--k", search.k, "Approximation coefficient")->capture_default_str();
  cluster_cmd->add_option("--tcm", search.t_cm, "Cut/merge threshold")->capture_default_str();
  cluster_cmd->add_option("--seed", cluster_seed, "Random seed (random if omitted)");
  cluster_cmd->add_option("--max-walk-factor", search.max_walk_factor,
                          "Walk length cap as a multiple of N")
      ->capture_default_str();
  cluster_cmd->add_option("--limit", search.limit, "Members listed per cluster")
      ->capture_default_str();
  cluster_cmd->add_option("--threads", search.threads, "Walk threads (0 = all cores)")
      ->capture_default_str();
  cluster_cmd->add_option("--format", format, "text|csv|json")->capture_default_str();

  // sweep
  randomnode::SweepCommand sweep;
  std::string queries_file, sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Coverage over a grid of k values");
  sweep_cmd->add_option("--snapshot,-s", snapshot_dir, "Snapshot directory")->required();
  sweep_cmd->add_option("--queries", queries_file, "File with one query per line");
  sweep_cmd->add_option("--top-terms", sweep.top_terms,
                        "Use the most frequent terms when no query file is given")
      ->capture_default_str();
  sweep_cmd->add_option("--k", sweep.k_values, "k values (default 0.1..1.0)")->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials, "Runs per (query, k)")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Base seed")->capture_default_str();
  sweep_cmd->add_option("--tcm", sweep.t_cm, "Cut/merge threshold")->capture_default_str();
  sweep_cmd->add_option("--max-walk-factor", sweep.max_walk_factor,
                        "Walk length cap as a multiple of N")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "Concurrent runs (0 = all cores)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "CSV output file (default stdout)");

  // serve
  randomnode::ServerOptions server_options;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API over a snapshot");
  serve_cmd->add_option("--snapshot,-s", snapshot_dir, "Snapshot directory")->required();
  serve_cmd->add_option("--host", server_options.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", server_options.port, "Port")->capture_default_str();
  serve_cmd->add_option("--cors-origin", server_options.cors_origin,
                        "Access-Control-Allow-Origin value (empty disables)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: INVALID_ARGUMENT: " << e.what() << "\n";
    return 2;
  }

  if (*gen_cmd) {
    if (auto s = randomnode::RunGen(gen, std::cout); !s.ok()) return Fail(s);
    return 0;
  }
  if (*ingest_cmd) {
    auto s = randomnode::RunIngest(edges_path, corpus_path, ingest_out,
                                   ingest_nodes, std::cout);
    return s.ok() ? 0 : Fail(s);
  }
  if (*serve_cmd) {
    auto s = randomnode::Serve(snapshot_dir, server_options);
    return s.ok() ? 0 : Fail(s);
  }

  auto parsed_format = randomnode::ParseOutputFormat(format);
  if (!parsed_format.ok()) return Fail(parsed_format.status());
  auto snapshot = Open(snapshot_dir);
  if (!snapshot.ok()) return Fail(snapshot.status());

  if (*fit_cmd) {
    auto parsed_mode = randomnode::ParseDegreeMode(mode);
    if (!parsed_mode.ok()) return Fail(parsed_mode.status());
    randomnode::FitCommand fit{fit_query, *parsed_mode, xmin, *parsed_format};
    auto s = randomnode::RunFit(*snapshot, fit, std::cout);
    return s.ok() ? 0 : Fail(s);
  }
  if (*cluster_cmd) {
    search.seed = cluster_seed;
    randomnode::ClusterCommand cluster{search, *parsed_format};
    auto s = randomnode::RunCluster(*snapshot, cluster, std::cout);
    return s.ok() ? 0 : Fail(s);
  }
  if (*sweep_cmd) {
    if (!queries_file.empty()) {
      auto queries = randomnode::ReadQueriesFile(queries_file);
      if (!queries.ok()) return Fail(queries.status());
      sweep.queries = *std::move(queries);
    }
    if (sweep_out.empty()) {
      auto s = randomnode::RunSweep(*snapshot, sweep, std::cout);
      return s.ok() ? 0 : Fail(s);
    }
    std::ofstream out(sweep_out);
    if (!out) return Fail(absl::PermissionDeniedError("cannot write " + sweep_out));
    auto s = randomnode::RunSweep(*snapshot, sweep, out);
    return s.ok() ? 0 : Fail(s);
  }
  return 0;
}
