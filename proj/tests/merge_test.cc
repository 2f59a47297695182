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
#include <ostream>
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "randomnode/coverage.h"
#include "randomnode/power_law.h"
#include "randomnode/reference_merge.h"
#include "merge_instances.h"

namespace randomnode {

void PrintTo(const Clustering& clustering, std::ostream* os) {
  for (const Cluster& cl : clustering.clusters) {
    *os << "{";
    for (std::size_t m = 0; m < cl.nodes.size(); ++m) {
      *os << (m ? " " : "") << cl.nodes[m] << ":" << cl.visits[m];
    }
    *os << "} ";
  }
  *os << "unassigned";
  for (NodeId v : clustering.unassigned) *os << " " << v;
}

namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

// Node names used in the hand-traced examples.
constexpr NodeId a = 0, b = 1, c = 2, d = 3;

std::set<std::vector<NodeId>> Partition(const Clustering& clustering) {
  std::set<std::vector<NodeId>> out;
  for (const Cluster& cl : clustering.clusters) out.insert(cl.nodes);
  return out;
}

void ExpectPartition(const Clustering& clustering, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const Cluster& cl : clustering.clusters) {
    EXPECT_FALSE(cl.nodes.empty());
    EXPECT_TRUE(std::is_sorted(cl.nodes.begin(), cl.nodes.end()));
    EXPECT_TRUE(std::binary_search(cl.nodes.begin(), cl.nodes.end(), cl.pivot));
    const auto top = std::max_element(cl.visits.begin(), cl.visits.end());
    EXPECT_EQ(cl.nodes[top - cl.visits.begin()], cl.pivot);
    for (NodeId v : cl.nodes) ++seen[v];
  }
  for (NodeId v : clustering.unassigned) ++seen[v];
  for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(seen[v], 1) << "node " << v;
}

TEST(MergePhaseTest, SharedPivotMerges) {
  std::vector<Walk> walks = {MakeWalk(a, {{a, 3}, {b, 1}}),
                             MakeWalk(a, {{a, 3}, {c, 1}})};
  Clustering result = MergePhase(walks, 0.25, 4);
  ASSERT_EQ(result.clusters.size(), 1);
  EXPECT_THAT(result.clusters[0].nodes, ElementsAre(a, b, c));
  EXPECT_THAT(result.clusters[0].visits, ElementsAre(6, 1, 1));
  EXPECT_EQ(result.clusters[0].pivot, a);
  EXPECT_THAT(result.unassigned, ElementsAre(d));
  EXPECT_EQ(result, ReferenceMerge(walks, 0.25, 4));
}

TEST(MergePhaseTest, DisjointWalksStayApart) {
  std::vector<Walk> walks = {MakeWalk(a, {{a, 5}, {b, 1}}),
                             MakeWalk(c, {{c, 4}, {d, 1}})};
  for (double t : {0.01, 0.25, 0.5, 1.0}) {
    Clustering result = MergePhase(walks, t, 4);
    EXPECT_EQ(Partition(result),
              (std::set<std::vector<NodeId>>{{a, b}, {c, d}}));
    EXPECT_THAT(result.unassigned, IsEmpty());
  }
}

TEST(MergePhaseTest, SingleWalk) {
  std::vector<Walk> walks = {MakeWalk(b, {{b, 2}, {c, 1}, {d, 4}})};
  Clustering result = MergePhase(walks, 0.25, 5);
  ASSERT_EQ(result.clusters.size(), 1);
  EXPECT_THAT(result.clusters[0].nodes, ElementsAre(b, c, d));
  EXPECT_EQ(result.clusters[0].pivot, d);
  EXPECT_THAT(result.unassigned, ElementsAre(0, 4));
  EXPECT_EQ(result, ReferenceMerge(walks, 0.25, 5));
}

TEST(MergePhaseTest, DominatedSharedNodeIsCut) {
  // b is the pivot of the first (longer) walk but marginal in the second, so
  // it is cut from the second walk, which then stands alone.
  std::vector<Walk> walks = {MakeWalk(a, {{a, 1}, {b, 4}}),
                             MakeWalk(c, {{b, 1}, {c, 3}})};
  Clustering result = MergePhase(walks, 0.25, 3);
  EXPECT_EQ(Partition(result), (std::set<std::vector<NodeId>>{{a, b}, {c}}));
  EXPECT_EQ(result, ReferenceMerge(walks, 0.25, 3));
}

TEST(MergePhaseTest, FullyCutWalkIsDropped) {
  std::vector<Walk> walks = {MakeWalk(a, {{a, 1}, {b, 6}}),
                             MakeWalk(b, {{b, 1}, {a, 1}, {c, 1}, {d, 1}}),
                             MakeWalk(c, {{c, 8}})};
  Clustering result = MergePhase(walks, 0.5, 4);
  EXPECT_EQ(result, ReferenceMerge(walks, 0.5, 4));
  ExpectPartition(result, 4);
}

TEST(MergePhaseTest, OrderPrefersLongerWalks) {
  std::vector<Walk> walks = {MakeWalk(a, {{a, 1}}),
                             MakeWalk(b, {{b, 2}, {c, 1}}),
                             MakeWalk(c, {{c, 2}, {d, 1}})};
  EXPECT_THAT(MergeOrder(walks), ElementsAre(1, 2, 0));
  walks[2].length = 9;
  EXPECT_THAT(MergeOrder(walks), ElementsAre(2, 1, 0));
}

TEST(MergePhaseTest, MatchesReferenceOnRandomInstances) {
  Rng rng = MakeStream(2024, 0);
  const std::vector<double> thresholds = {0.05, 0.1, 0.25, 0.3, 0.5, 0.75, 1.0};
  std::uniform_int_distribution<std::size_t> pick(0, thresholds.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 0;
    std::vector<Walk> walks = RandomInstance(rng, n);
    const double t = thresholds[pick(rng)];
    Clustering fast = MergePhase(walks, t, n);
    Clustering slow = ReferenceMerge(walks, t, n);
    ASSERT_EQ(fast, slow) << "instance " << i << " t_cm " << t;
    ExpectPartition(fast, n);
  }
}

TEST(MergePhaseTest, ReferenceIsIdempotent) {
  Rng rng = MakeStream(2025, 0);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 0;
    std::vector<Walk> walks = RandomInstance(rng, n);
    Clustering once = ReferenceMerge(walks, 0.25, n);
    std::vector<Walk> as_walks;
    for (const Cluster& cl : once.clusters) {
      std::vector<std::pair<NodeId, std::uint32_t>> visits;
      for (std::size_t m = 0; m < cl.nodes.size(); ++m) {
        visits.push_back({cl.nodes[m], static_cast<std::uint32_t>(cl.visits[m])});
      }
      as_walks.push_back(MakeWalk(cl.pivot, visits));
    }
    Clustering twice = ReferenceMerge(as_walks, 0.25, n);
    EXPECT_EQ(Partition(twice), Partition(once));
    EXPECT_EQ(twice.unassigned, once.unassigned);
  }
}

TEST(ClusterGraphTest, MoreMergingAtHighThreshold) {
  // Strongly connected: a bidirected ring with chords.
  std::vector<Edge> edges;
  for (NodeId v = 0; v < 30; ++v) {
    edges.push_back({v, (v + 1) % 30});
    edges.push_back({(v + 1) % 30, v});
    edges.push_back({v, (v * 7 + 3) % 30});
  }
  LinkGraph g = LinkGraph::FromEdges(30, edges);
  WalkConfig config;
  config.k = 1.0;
  config.seed = 3;
  config.t_cm = 1.0;
  auto loose = ClusterGraph(g, config);
  config.t_cm = 0.05;
  auto strict = ClusterGraph(g, config);
  ASSERT_TRUE(loose.ok() && strict.ok());
  EXPECT_LE(loose->clusters.size(), strict->clusters.size());
}

TEST(ClusterGraphTest, ThresholdMonotoneOnAverage) {
  auto g = GenerateGraph(400, 2.5, 1, 6);
  ASSERT_TRUE(g.ok());
  double low = 0, high = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    WalkConfig config;
    config.seed = seed;
    config.max_walk_factor = 0.1;
    config.t_cm = 0.05;
    low += ClusterGraph(*g, config)->clusters.size();
    config.t_cm = 0.8;
    high += ClusterGraph(*g, config)->clusters.size();
  }
  EXPECT_GE(low / 20, high / 20);
}

TEST(ClusterGraphTest, PartitionAndDeterminism) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = GenerateGraph(200 + 30 * seed, 2.2 + 0.05 * seed, 1, seed);
    ASSERT_TRUE(g.ok());
    WalkConfig config;
    config.seed = seed;
    config.k = 0.1 * seed;
    config.t_cm = 0.1 * seed;
    config.max_walk_factor = 0.2;
    auto first = ClusterGraph(*g, config);
    config.threads = 3;
    auto second = ClusterGraph(*g, config);
    ASSERT_TRUE(first.ok() && second.ok());
    EXPECT_EQ(*first, *second);
    ExpectPartition(*first, g->NodeCount());
    std::vector<std::int64_t> labels = first->Labels(g->NodeCount());
    for (NodeId v : first->unassigned) EXPECT_EQ(labels[v], -1);
    for (std::size_t i = 0; i < first->clusters.size(); ++i) {
      for (NodeId v : first->clusters[i].nodes) EXPECT_EQ(labels[v], i);
    }
  }
}

}  // namespace
}  // namespace randomnode
