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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Usage: acceptance_test [criterion ...]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "httplib.h"
#include "merge_instances.h"
#include "randomnode/commands.h"
#include "randomnode/coverage.h"
#include "randomnode/merge.h"
#include "randomnode/power_law.h"
#include "randomnode/reference_merge.h"
#include "randomnode/search.h"
#include "randomnode/server.h"
#include "randomnode/snapshot.h"
#include "test_util.h"

namespace randomnode {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// 50,000-node synthetic snapshot shared by criteria 2 and 3, built once
// through the same gen/ingest path as the CLI.
const Snapshot& LargeSnapshot() {
  static const Snapshot* snapshot = [] {
    const auto start = Clock::now();
    const std::filesystem::path dir = TempDir("acceptance");
    GenCommand gen;
    gen.nodes = 50000;
    gen.seed = 2026;
    gen.out_dir = (dir / "src").string();
    std::ostringstream log;
    absl::Status status = RunGen(gen, log);
    if (status.ok()) {
      status = RunIngest((dir / "src" / "edges.tsv").string(),
                         (dir / "src" / "corpus.jsonl").string(),
                         (dir / "snap").string(), gen.nodes, log);
    }
    absl::StatusOr<Snapshot> loaded =
        status.ok() ? LoadSnapshot((dir / "snap").string()) : status;
    std::filesystem::remove_all(dir);
    if (!loaded.ok()) {
      std::cerr << "cannot build the 50k snapshot: " << loaded.status() << "\n";
      std::exit(2);
    }
    std::cout << absl::StrFormat("# 50k snapshot: %d nodes, %d edges (%.1fs)\n",
                                 loaded->graph.NodeCount(),
                                 loaded->graph.EdgeCount(), Seconds(start));
    return new Snapshot(*std::move(loaded));
  }();
  return *snapshot;
}

// 1. Estimator recovery at x_min=1.
Outcome EstimatorRecovery() {
  const auto start = Clock::now();
  constexpr std::size_t kSamples = 100000;
  double worst = 0.0;
  bool se_exact = true;
  std::string per_beta;
  for (double beta : {2.1, 2.5, 2.84}) {
    double beta_worst = 0.0, sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto samples = SamplePowerLaw(beta, 1, kSamples, seed);
      auto fit = FitBeta(std::span<const std::int64_t>(*samples), 1);
      if (!fit.ok()) return {false, std::string(fit.status().message())};
      beta_worst = std::max(beta_worst, std::abs(fit->beta_hat - beta));
      sum += fit->beta_hat;
      se_exact &= fit->n_samples == kSamples &&
                  fit->std_error == (fit->beta_hat - 1.0) / std::sqrt(double(kSamples));
    }
    worst = std::max(worst, beta_worst);
    per_beta += absl::StrFormat(" beta=%.2f mean_hat=%.4f", beta, sum / 10);
  }
  const double elapsed = Seconds(start);
  return {worst <= 0.03 && se_exact && elapsed < 10.0,
          absl::StrFormat("max |beta_hat-beta| = %.4f (tol 0.03), std_error exact: "
                          "%s, %.1fs;%s",
                          worst, se_exact ? "yes" : "no", elapsed, per_beta)};
}

// 2. Full-graph vs query-subgraph exponent.
Outcome ScaleInvariance() {
  const Snapshot& snapshot = LargeSnapshot();
  const auto start = Clock::now();
  auto full_hist = ComputeDegreeHistogram(snapshot.graph, DegreeMode::kIn);
  auto full = FitBeta(std::span<const std::uint32_t>(full_hist.samples), 1);
  if (!full.ok()) return {false, std::string(full.status().message())};
  std::vector<double> sub_betas;
  for (const auto& [term, df] : snapshot.index.TermsByFrequency(100)) {
    auto sub = InduceSubgraph(snapshot.graph, MatchQuery(snapshot.index, term), term);
    if (!sub.ok()) return {false, std::string(sub.status().message())};
    auto hist = ComputeDegreeHistogram(sub->graph, DegreeMode::kIn);
    auto fit = FitBeta(std::span<const std::uint32_t>(hist.samples), 1);
    if (fit.ok()) sub_betas.push_back(fit->beta_hat);
  }
  if (sub_betas.empty()) return {false, "no subgraph could be fitted"};
  const double median = Median(sub_betas);
  const double gap = std::abs(median - full->beta_hat);
  const double elapsed = Seconds(start);
  return {gap <= 0.2 && elapsed < 120.0,
          absl::StrFormat("full beta_hat %.4f, median of %d subgraphs %.4f, "
                          "gap %.4f (tol 0.2), %.1fs",
                          full->beta_hat, sub_betas.size(), median, gap, elapsed)};
}

// 3. Coverage grows with k.
Outcome CoverageTrend() {
  const Snapshot& snapshot = LargeSnapshot();
  const auto start = Clock::now();
  std::vector<QueryInducedSubgraph> subs;
  for (const auto& [term, df] : snapshot.index.TermsByFrequency(20)) {
    auto sub = InduceSubgraph(snapshot.graph, MatchQuery(snapshot.index, term), term);
    if (!sub.ok()) return {false, std::string(sub.status().message())};
    subs.push_back(*std::move(sub));
  }
  const std::vector<double> ks = DefaultKGrid();
  auto rows = SweepK(subs, ks, 5, 1);
  if (!rows.ok()) return {false, std::string(rows.status().message())};
  std::map<double, std::vector<double>> by_k;
  for (const SweepRow& r : *rows) by_k[r.k].push_back(r.coverage);
  std::vector<double> mean, se;
  for (double k : ks) {
    const auto& v = by_k[k];
    double m = 0;
    for (double x : v) m += x;
    m /= v.size();
    double ss = 0;
    for (double x : v) ss += (x - m) * (x - m);
    mean.push_back(m);
    se.push_back(std::sqrt(ss / (v.size() - 1)) / std::sqrt(double(v.size())));
  }
  bool monotone = true;
  std::string trace;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    trace += absl::StrFormat(" %.1f:%.4f", ks[i], mean[i]);
    if (i > 0) {
      const double pooled = std::sqrt(se[i - 1] * se[i - 1] + se[i] * se[i]);
      monotone &= mean[i] >= mean[i - 1] - pooled;
    }
  }
  const double elapsed = Seconds(start);
  const bool rises = mean.back() > mean.front();
  return {monotone && rises && elapsed < 300.0,
          absl::StrFormat("%d rows, non-decreasing within pooled se: %s, "
                          "mean(1.0) > mean(0.1): %s, %.1fs; means%s",
                          rows->size(), monotone ? "yes" : "no",
                          rises ? "yes" : "no", elapsed, trace)};
}

// 4. Fast merge equals the dense reference.
Outcome MergeOracle() {
  Rng rng = MakeStream(4, 0);
  const std::vector<double> thresholds = {0.05, 0.1, 0.25, 0.3, 0.5, 0.75, 1.0};
  std::uniform_int_distribution<std::size_t> pick(0, thresholds.size() - 1);
  int mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 0;
    std::vector<Walk> walks = RandomInstance(rng, n);
    const double t = thresholds[pick(rng)];
    mismatches += !(MergePhase(walks, t, n) == ReferenceMerge(walks, t, n));
  }
  return {mismatches == 0, absl::StrFormat("%d/500 instances differ", mismatches)};
}

// 5. Partition, walk-length and coverage invariants on random inputs.
Outcome InvariantFuzz() {
  Rng rng = MakeStream(5, 0);
  int violations = 0;
  std::size_t splits = 0;
  std::string first;
  auto violate = [&](int pair, const std::string& what) {
    if (violations++ == 0) first = absl::StrFormat(" (first: pair %d %s)", pair, what);
  };
  for (int pair = 0; pair < 200; ++pair) {
    std::uniform_int_distribution<std::size_t> size(2, 400);
    std::uniform_real_distribution<double> beta(2.05, 3.2), unit(0.0, 1.0);
    auto g = GenerateGraph(size(rng), beta(rng), 1, rng());
    if (!g.ok()) {
      violate(pair, "graph generation failed");
      continue;
    }
    WalkConfig config;
    config.k = std::max(0.01, unit(rng));
    config.t_cm = std::max(0.01, unit(rng));
    config.max_walk_factor = 0.05 + 1.5 * unit(rng);
    config.seed = rng();
    config.threads = 1 + pair % 3;
    auto walks = WalkPhase(*g, config);
    if (!walks.ok()) {
      violate(pair, "walk phase failed");
      continue;
    }
    const std::uint64_t cap = MaxWalkLength(config, g->NodeCount());
    for (const Walk& w : *walks) {
      if (w.length > cap) violate(pair, "walk over the length cap");
    }
    Clustering c = MergePhase(*walks, config.t_cm, g->NodeCount());
    std::vector<int> seen(g->NodeCount(), 0);
    for (const Cluster& cl : c.clusters) {
      if (cl.nodes.empty()) violate(pair, "empty cluster");
      if (!std::binary_search(cl.nodes.begin(), cl.nodes.end(), cl.pivot)) {
        violate(pair, "pivot outside its cluster");
      }
      for (NodeId v : cl.nodes) ++seen[v];
    }
    for (NodeId v : c.unassigned) ++seen[v];
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
      violate(pair, "not a partition");
      continue;
    }
    auto before = Coverage(*g, c);
    if (!before.ok() || *before < 0.0 || *before > 1.0) {
      violate(pair, "coverage outside [0,1]");
      continue;
    }
    for (int s = 0; s < 50; ++s) {
      std::vector<std::size_t> splittable;
      for (std::size_t i = 0; i < c.clusters.size(); ++i) {
        if (c.clusters[i].nodes.size() >= 2) splittable.push_back(i);
      }
      if (splittable.empty()) break;
      Clustering split = c;
      Cluster& target = split.clusters[splittable[rng() % splittable.size()]];
      std::vector<NodeId> nodes = target.nodes;
      std::shuffle(nodes.begin(), nodes.end(), rng);
      const std::size_t cut = 1 + rng() % (nodes.size() - 1);
      Cluster tail;
      tail.nodes.assign(nodes.begin() + cut, nodes.end());
      nodes.resize(cut);
      std::sort(nodes.begin(), nodes.end());
      std::sort(tail.nodes.begin(), tail.nodes.end());
      target.nodes = nodes;
      target.visits.assign(nodes.size(), 1);
      target.pivot = nodes.front();
      tail.visits.assign(tail.nodes.size(), 1);
      tail.pivot = tail.nodes.front();
      split.clusters.push_back(tail);
      auto after = Coverage(*g, split);
      ++splits;
      if (!after.ok() || *after > *before) violate(pair, "split raised coverage");
    }
  }
  return {violations == 0,
          absl::StrFormat("%d violations over 200 pairs and %d splits%s",
                          violations, splits, first)};
}

std::string RunCli(const std::string& args) {
  const std::string command = std::string(RANDOMNODE_CLI_PATH) + " " + args + " 2>&1";
  std::string out;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) out.append(buffer, n);
  const int status = ::pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<nonzero exit>";
  return out;
}

// 6. Byte-identical CLI output and HTTP bodies.
Outcome Determinism() {
  auto loaded = LoadSnapshot(RANDOMNODE_DEMO_DIR);
  if (!loaded.ok()) return {false, std::string(loaded.status().message())};
  auto snapshot = std::make_shared<const Snapshot>(*std::move(loaded));
  ServerOptions options;
  options.port = 0;
  SearchServer server(snapshot, options);
  auto port = server.Bind();
  if (!port.ok()) return {false, std::string(port.status().message())};
  auto listening = std::async(std::launch::async, [&] { return server.Listen(); });
  while (!server.IsRunning()) std::this_thread::yield();

  int checks = 0, failures = 0;
  std::string first;
  auto expect_same = [&](const std::string& a, const std::string& b,
                         const std::string& what) {
    ++checks;
    if (a != b && failures++ == 0) first = " (first: " + what + ")";
  };
  const std::string demo = RANDOMNODE_DEMO_DIR;
  for (const char* query : {"beograd", "politika", "vesti sport"}) {
    for (const char* seed : {"1", "20260101"}) {
      for (const char* tcm : {"0.1", "0.25"}) {
        const std::string args = absl::StrFormat(
            "cluster -s %s -q '%s' --k 0.6 --tcm %s --seed %s", demo, query, tcm, seed);
        for (const char* format : {"text", "csv", "json"}) {
          const std::string base = RunCli(args + " --format " + format + " --threads 1");
          expect_same(base, RunCli(args + " --format " + format + " --threads 1"),
                      args + " repeat");
          expect_same(base, RunCli(args + " --format " + format + " --threads 4"),
                      args + " threads 4");
          expect_same(base, RunCli(args + " --format " + format + " --threads 0"),
                      args + " threads 0");
        }
        const std::string cli_json = RunCli(args + " --format json --threads 4");
        const std::string path = httplib::append_query_params(
            "/search", {{"q", query}, {"k", "0.6"}, {"tcm", tcm}, {"seed", seed}});
        httplib::Client client("127.0.0.1", *port);
        auto first_reply = client.Get(path);
        auto second_reply = client.Get(path);
        if (!first_reply || !second_reply) {
          expect_same("", "x", "http request failed");
          continue;
        }
        expect_same(first_reply->body, second_reply->body, path + " repeat");
        expect_same(first_reply->body + "\n", cli_json, path + " vs CLI");
        std::vector<std::future<std::string>> parallel;
        for (int i = 0; i < 4; ++i) {
          parallel.push_back(std::async(std::launch::async, [&] {
            httplib::Client c("127.0.0.1", *port);
            auto r = c.Get(path);
            return r ? r->body : std::string();
          }));
        }
        for (auto& f : parallel) expect_same(first_reply->body, f.get(), path + " concurrent");
      }
    }
  }
  server.Stop();
  const absl::Status served = listening.get();
  return {failures == 0 && served.ok(),
          absl::StrFormat("%d/%d comparisons differ%s", failures, checks, first)};
}

// 7. Mean stopping-state walk length versus N.
Outcome WalkLengthGrowth() {
  const auto start = Clock::now();
  constexpr int kSeeds = 20;
  constexpr int kWalks = 300;
  std::vector<double> means;
  std::string trace;
  for (std::size_t n : {std::size_t{1000}, std::size_t{10000}, std::size_t{100000}}) {
    double sum = 0;
    std::size_t stopped = 0, capped = 0, sinks = 0;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
      auto g = GenerateGraph(n, 2.5, 1, seed);
      if (!g.ok()) return {false, std::string(g.status().message())};
      for (NodeId v = 0; v < n; ++v) sinks += g->OutDegree(v) == 0;
      Rng starts = MakeStream(seed, 0);
      std::uniform_int_distribution<NodeId> pick(0, n - 1);
      for (int i = 0; i < kWalks; ++i) {
        Rng rng = MakeStream(seed, 1 + i);
        Walk w = RandomWalk(*g, pick(starts), n, rng);
        if (w.terminated == Termination::kStoppingState) {
          sum += w.length;
          ++stopped;
        } else {
          ++capped;
        }
      }
    }
    const double mean = stopped ? sum / stopped : std::nan("");
    means.push_back(mean);
    trace += absl::StrFormat(" N=%d: mean %.3f over %d stopped walks (%d capped, "
                             "%.4f sink fraction);",
                             n, mean, stopped, capped,
                             double(sinks) / (kSeeds * double(n)));
  }
  const double bound =
      means[0] + 3.0 * (std::log(std::log(1e5)) - std::log(std::log(1e3)));
  const bool growth = means[2] <= bound;
  const bool linear = means[2] <= 0.05 * 1e5;
  return {growth && linear,
          absl::StrFormat("mean(1e5) %.3f vs bound %.3f, <= 0.05N: %s, %.1fs;%s",
                          means[2], bound, linear ? "yes" : "no", Seconds(start),
                          trace)};
}

// 8. Demo snapshot end to end.
Outcome Demo() {
  const auto start = Clock::now();
  auto snapshot = LoadSnapshot(RANDOMNODE_DEMO_DIR);
  if (!snapshot.ok()) return {false, std::string(snapshot.status().message())};
  const std::vector<std::string> queries = {
      "beograd", "politika", "pravda", "rubrike", "shop",
      "nekretnine", "leasing", "dekanat", "banking", "expo"};
  std::string rows;
  bool shaped = true;
  for (const std::string& q : queries) {
    ClusterCommand cmd;
    cmd.params.query = q;
    cmd.params.seed = 8;
    std::ostringstream out;
    absl::Status status = RunCluster(*snapshot, cmd, out);
    if (!status.ok()) return {false, q + ": " + std::string(status.message())};
    std::vector<std::string> lines = absl::StrSplit(out.str(), '\n');
    // Parameter line, header, then the row.
    if (lines.size() < 3) {
      shaped = false;
      continue;
    }
    std::vector<std::string> cells =
        absl::StrSplit(lines[2], ' ', absl::SkipWhitespace());
    double coverage = -1;
    std::size_t n_links, incluster, n_clusters, max_size;
    shaped &= cells.size() == 6 && cells[0] == q &&
              absl::SimpleAtod(cells[1], &coverage) && coverage >= 0 && coverage <= 1 &&
              absl::SimpleAtoi(cells[2], &n_links) &&
              absl::SimpleAtoi(cells[3], &incluster) && incluster <= n_links &&
              absl::SimpleAtoi(cells[4], &n_clusters) &&
              absl::SimpleAtoi(cells[5], &max_size);
    rows += "\n#   " + lines[2];
  }
  const double elapsed = Seconds(start);
  return {shaped && elapsed < 5.0 && snapshot->graph.NodeCount() <= 5000,
          absl::StrFormat("%d nodes, 10 queries in %.2fs (limit 5s), rows %s%s",
                          snapshot->graph.NodeCount(), elapsed,
                          shaped ? "well formed" : "malformed", rows)};
}

}  // namespace
}  // namespace randomnode

int main(int argc, char** argv) {
  using randomnode::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"estimator recovery", randomnode::EstimatorRecovery},
      {"subgraph scale invariance", randomnode::ScaleInvariance},
      {"coverage trend in k", randomnode::CoverageTrend},
      {"merge oracle equivalence", randomnode::MergeOracle},
      {"clustering invariant fuzz", randomnode::InvariantFuzz},
      {"determinism", randomnode::Determinism},
      {"walk-length growth", randomnode::WalkLengthGrowth},
      {"demo end to end", randomnode::Demo},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome outcome = criteria[i].second();
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " " << id << " "
              << criteria[i].first << ": " << outcome.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
