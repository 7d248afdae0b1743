#include "egf/cluster.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "egf/graph.hpp"
#include "egf/pathint.hpp"
#include "egf/rng.hpp"
#include "egf/stats.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace egf {
namespace {

namespace t = ::egf::testing;

Eigen::MatrixXd Complete(Eigen::Index n) {
  return Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd Path3() {
  Eigen::MatrixXd w(3, 3);
  w << 0, 1, 0,
       1, 0, 1,
       0, 1, 0;
  return w;
}

const std::vector<std::size_t> kFirstHalf = {0, 1};
const std::vector<std::size_t> kSecondHalf = {2, 3};

TEST(ConditionalDescriptorTest, FullMaskEqualsSetDescriptor) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedDigraph g(t::random_weights(rng, 8, 0.5));
    const double full = conditional_descriptor(g, std::vector<bool>(8, true));
    EXPECT_NEAR(full, descriptor(g).phi_set, 1e-12);
  }
}

TEST(ConditionalDescriptorTest, HalfOfCompleteGraph) {
  const WeightedDigraph g(Complete(4));
  const std::vector<bool> mask = {true, true, false, false};
  EXPECT_NEAR(conditional_descriptor(g, mask), std::cosh(2.0), 1e-12);
  ClusterOptions union_norm;
  union_norm.norm = ConditionalNorm::kUnionSubgraph;
  EXPECT_NEAR(conditional_descriptor(g, mask, union_norm), (1.0 + std::exp(-4.0)) / 2.0, 1e-12);
}

TEST(ConditionalDescriptorTest, NoCrossEdgesMatchesStandalone) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(5, 5);
  w.block(0, 0, 2, 2) = Complete(2) * 0.5;
  w.block(2, 2, 3, 3) = Complete(3);
  const WeightedDigraph g(w);
  const std::vector<bool> mask = {true, true, false, false, false};
  EXPECT_NEAR(conditional_descriptor(g, mask), std::exp(-0.5), 1e-12);
}

TEST(ConditionalDescriptorTest, RejectsBadMasks) {
  const WeightedDigraph g(Complete(3));
  EXPECT_THROW(conditional_descriptor(g, {false, false, false}), std::invalid_argument);
  EXPECT_THROW(conditional_descriptor(g, {true, false}), std::invalid_argument);
}

TEST(AffinityTest, TwoHalvesOfCompleteGraph) {
  const WeightedDigraph g(Complete(4));
  EXPECT_NEAR(affinity(g, kFirstHalf, kSecondHalf), 5.524391382167263, 1e-11);
  ClusterOptions union_norm;
  union_norm.norm = ConditionalNorm::kUnionSubgraph;
  EXPECT_NEAR(affinity(g, kFirstHalf, kSecondHalf, union_norm), -0.9816843611112658, 1e-12);
}

TEST(AffinityTest, DisconnectedClustersHaveZeroAffinity) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
  w.block(0, 0, 2, 2) = Complete(2);
  w.block(2, 2, 2, 2) = Complete(2) * 0.3;
  EXPECT_EQ(affinity(WeightedDigraph(w), kFirstHalf, kSecondHalf), 0.0);
}

TEST(AffinityTest, SymmetricBitForBit) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedDigraph g(t::random_weights(rng, 12, 0.4));
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < 12; ++i) {
      const double u = rng.uniform();
      if (u < 0.4) {
        a.push_back(i);
      } else if (u < 0.8) {
        b.push_back(i);
      }
    }
    if (a.empty() || b.empty()) continue;
    EXPECT_EQ(affinity(g, a, b), affinity(g, b, a));
  }
}

TEST(AffinityTest, RejectsOverlapAndEmpty) {
  const WeightedDigraph g(Complete(4));
  const std::vector<std::size_t> overlap = {1, 2};
  const std::vector<std::size_t> none;
  EXPECT_THROW(affinity(g, kFirstHalf, overlap), std::invalid_argument);
  EXPECT_THROW(affinity(g, kFirstHalf, none), std::invalid_argument);
}

Partition Singletons(std::size_t n) {
  Partition p;
  for (std::size_t i = 0; i < n; ++i) p.clusters.push_back({i});
  return p;
}

TEST(AgglomerateTest, TwoDisjointCliquesFromSingletons) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(6, 6);
  w.block(0, 0, 3, 3) = Complete(3);
  w.block(3, 3, 3, 3) = Complete(3);
  const Partition p = agglomerate(WeightedDigraph(w), Singletons(6), 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.clusters[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(p.clusters[1], (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(p.exemplars, (std::vector<std::size_t>{0, 3}));
}

TEST(AgglomerateTest, TargetEqualToInitialIsNoOp) {
  const Partition p = agglomerate(WeightedDigraph(Complete(3)), Singletons(3), 3);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.exemplars, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(AgglomerateTest, TiesMergeLexicographicallySmallestPair) {
  std::vector<MergeEvent> events;
  ClusterOptions opts;
  opts.on_merge = [&](const Partition&, const MergeEvent& e) { events.push_back(e); };
  const Partition p = agglomerate(WeightedDigraph(4), Singletons(4), 3, opts);
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].first, 0u);
  EXPECT_EQ(events[0].second, 1u);
  EXPECT_EQ(p.clusters[0], (std::vector<std::size_t>{0, 1}));
}

TEST(AgglomerateTest, RejectsBadTargets) {
  const WeightedDigraph g(Complete(3));
  EXPECT_THROW(agglomerate(g, Singletons(3), 0), std::invalid_argument);
  EXPECT_THROW(agglomerate(g, Singletons(3), 4), std::invalid_argument);
  Partition broken;
  broken.clusters = {{0, 1}};
  EXPECT_THROW(agglomerate(g, broken, 1), std::invalid_argument);
  EXPECT_THROW(agglomerate(g, WeightedDigraph(2), 1), std::invalid_argument);
}

TEST(AgglomerateTest, EveryMergeKeepsAValidPartition) {
  Rng rng(19);
  const std::size_t n = 20;
  const WeightedDigraph g(t::random_weights(rng, n, 0.3));
  std::size_t last = n;
  ClusterOptions opts;
  opts.on_merge = [&](const Partition& p, const MergeEvent& e) {
    EXPECT_TRUE(p.is_valid(n));
    EXPECT_EQ(p.size(), last - 1);
    EXPECT_LT(e.first, e.second);
    last = p.size();
  };
  const Partition p = agglomerate(g, Singletons(n), 4, opts);
  EXPECT_EQ(last, 4u);
  EXPECT_TRUE(p.is_valid(n));
  ASSERT_EQ(p.exemplars.size(), 4u);
}

TEST(AgglomerateTest, MergeChoosesTheMaximumAffinity) {
  Rng rng(29);
  const std::size_t n = 10;
  const WeightedDigraph g(t::random_weights(rng, n, 0.4));
  Partition before = Singletons(n);
  ClusterOptions opts;
  opts.on_merge = [&](const Partition& p, const MergeEvent& e) {
    for (std::size_t i = 0; i < before.size(); ++i) {
      for (std::size_t j = i + 1; j < before.size(); ++j) {
        EXPECT_LE(affinity(g, before.clusters[i], before.clusters[j]), e.affinity);
      }
    }
    EXPECT_EQ(affinity(g, before.clusters[e.first], before.clusters[e.second]), e.affinity);
    before = p;
  };
  agglomerate(g, Singletons(n), 1, opts);
}

double BlobAri(std::uint64_t seed, std::size_t blobs, ConditionalNorm norm) {
  const auto data = t::gaussian_blobs(seed, blobs, 40, 12.0);
  PointClusteringParams params;
  params.k = 10;
  params.target_k = blobs;
  ClusterOptions opts;
  opts.norm = norm;
  const Partition p = cluster_points(PointSet(data.points), params, opts);
  EXPECT_EQ(p.size(), blobs);
  const auto labels = p.labels(data.points.size());
  return adjusted_rand_index(labels, data.labels);
}

TEST(ClusterPointsTest, RecoversTwoBlobs) {
  EXPECT_GE(BlobAri(1, 2, ConditionalNorm::kEndpointSubgraph), 0.9);
}

TEST(ClusterPointsTest, TwentyPointBlobsRecoveredExactly) {
  const auto data = t::gaussian_blobs(9, 2, 20, 12.0);
  PointClusteringParams params;
  params.k = 5;
  params.target_k = 2;
  const Partition p = cluster_points(PointSet(data.points), params);
  ASSERT_EQ(p.size(), 2u);
  const auto labels = p.labels(40);
  for (std::size_t i = 0; i < 40; ++i) EXPECT_EQ(labels[i], data.labels[i]);
}

TEST(ClusterPointsTest, RecoversThreeBlobs) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_GE(BlobAri(seed, 3, ConditionalNorm::kEndpointSubgraph), 0.9) << "seed " << seed;
  }
}

TEST(ClusterPointsTest, UnionNormalisationDoesNotSeparateBlobs) {
  // Kept selectable for comparison; it rewards absorbing singletons into one
  // cluster instead of joining like with like.
  EXPECT_LT(BlobAri(1, 3, ConditionalNorm::kUnionSubgraph), 0.9);
}

TEST(ClusterPointsTest, SinglePoint) {
  PointClusteringParams params;
  params.target_k = 1;
  const Partition p = cluster_points(PointSet(std::vector<std::vector<double>>{{1.0, 2.0}}), params);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.exemplars, (std::vector<std::size_t>{0}));
  params.target_k = 2;
  EXPECT_THROW(cluster_points(PointSet(std::vector<std::vector<double>>{{1.0}}), params),
               std::invalid_argument);
}

TEST(ClusterPointsTest, Deterministic) {
  const auto data = t::gaussian_blobs(4, 3, 30, 10.0);
  PointClusteringParams params;
  params.k = 8;
  const Partition a = cluster_points(PointSet(data.points), params);
  const Partition b = cluster_points(PointSet(data.points), params);
  EXPECT_EQ(a.clusters, b.clusters);
  EXPECT_EQ(a.exemplars, b.exemplars);
}

TEST(ExemplarTest, PathCentre) {
  const DescriptorResult d = descriptor(WeightedDigraph(Path3()));
  const Eigen::VectorXd score = d.z.rowwise().sum() + d.z.colwise().sum().transpose();
  EXPECT_NEAR(score(0), 0.95993, 1e-5);
  EXPECT_NEAR(score(1), 1.33029, 1e-5);
  EXPECT_EQ(exemplar(d), 1u);
}

TEST(ExemplarTest, SymmetricTiesGoToSmallestIndex) {
  EXPECT_EQ(exemplar(descriptor(WeightedDigraph(Complete(3)))), 0u);
  Eigen::MatrixXd cycle = Eigen::MatrixXd::Zero(3, 3);
  cycle(0, 1) = cycle(1, 2) = cycle(2, 0) = 1.0;
  EXPECT_EQ(exemplar(descriptor(WeightedDigraph(cycle))), 0u);
  EXPECT_EQ(exemplar(descriptor(WeightedDigraph(3))), 0u);
}

TEST(ExemplarTest, GlobalIndexWithinSubset) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(5, 5);
  w.block(2, 2, 3, 3) = Path3();
  const std::vector<std::size_t> nodes = {2, 3, 4};
  EXPECT_EQ(exemplar(WeightedDigraph(w), nodes), 3u);
  EXPECT_THROW(exemplar(WeightedDigraph(w), std::vector<std::size_t>{}), std::invalid_argument);
}

}  // namespace
}  // namespace egf
