#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "egf/graph.hpp"
#include "egf/partition.hpp"
#include "egf/pathint.hpp"

namespace egf {

/// Which support defines H in the conditional descriptor of a cluster a
/// inside the union a ∪ b.
enum class ConditionalNorm {
  /// Support restricted to the nodes of a (H equals the standalone H_a);
  /// paths may still pass through b.
  kEndpointSubgraph,
  /// Support of the whole union sub-graph.
  kUnionSubgraph,
};

struct MergeEvent {
  std::size_t first = 0;   // index of the lower cluster before the merge
  std::size_t second = 0;  // index of the higher cluster before the merge
  double affinity = 0.0;
};

struct ClusterOptions {
  SeriesOptions series;
  ConditionalNorm norm = ConditionalNorm::kEndpointSubgraph;
  /// Called after every merge with the updated partition.
  std::function<void(const Partition&, const MergeEvent&)> on_merge;
};

/// Set descriptor of `g` restricted to the nodes flagged in `member_mask`,
/// where paths may pass through every node of `g_union`:
///   (1 / (|a| e^H')) m^T e^W m.
/// Throws std::invalid_argument when the mask is empty or mis-sized.
double conditional_descriptor(const WeightedDigraph& g_union,
                              const std::vector<bool>& member_mask,
                              const ClusterOptions& opts = {});

/// Standalone set descriptor of the sub-graph on `nodes`.
double set_descriptor(const WeightedDigraph& g, std::span<const std::size_t> nodes,
                      const SeriesOptions& opts = {});

/// Structural affinity: the gain in each cluster's descriptor when paths may
/// run through the other cluster, summed over both clusters. Symmetric
/// bit for bit in (ca, cb).
double affinity(const WeightedDigraph& g, std::span<const std::size_t> ca,
                std::span<const std::size_t> cb, const ClusterOptions& opts = {});

/// Greedy agglomeration from `initial` down to `target_k` clusters, merging
/// the pair of maximum affinity each round. Ties go to the pair whose
/// smallest members are lexicographically smallest. Exemplars are filled in
/// on the returned partition. Throws std::invalid_argument when target_k is
/// zero or exceeds the initial cluster count.
Partition agglomerate(const WeightedDigraph& g, Partition initial, std::size_t target_k,
                      const ClusterOptions& opts = {});

/// Same, seeded by the weakly connected components of `seed_graph`.
Partition agglomerate(const WeightedDigraph& g, const WeightedDigraph& seed_graph,
                      std::size_t target_k, const ClusterOptions& opts = {});

/// Local index maximising row sum + column sum of z; ties go to the smaller
/// index.
std::size_t exemplar(const DescriptorResult& cluster_descriptor);

/// Global index of the exemplar of `nodes` within g.
std::size_t exemplar(const WeightedDigraph& g, std::span<const std::size_t> nodes,
                     const SeriesOptions& opts = {});

struct PointClusteringParams {
  std::size_t k = 20;
  std::size_t k0 = 1;
  std::size_t target_k = 3;
  double bandwidth_scale = 1.0;
};

/// K-NN graph for the affinities, k0-NN components as seeds, then
/// agglomerate. k and k0 are clamped to n - 1.
Partition cluster_points(const PointSet& points, const PointClusteringParams& params,
                         const ClusterOptions& opts = {});

}  // namespace egf
