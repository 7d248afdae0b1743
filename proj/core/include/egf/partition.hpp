#pragma once

#include <cstddef>
#include <vector>

namespace egf {

/// Disjoint clusters covering the node indices 0..n-1.
///
/// Clusters are kept sorted internally and ordered by their smallest member.
/// `exemplars` is either empty or holds one node per cluster, with
/// exemplars[c] a member of clusters[c].
struct Partition {
  std::vector<std::vector<std::size_t>> clusters;
  std::vector<std::size_t> exemplars;

  std::size_t size() const { return clusters.size(); }

  /// Per-node cluster index; throws if the partition does not cover 0..n-1.
  std::vector<std::size_t> labels(std::size_t node_count) const;

  /// True when the clusters are nonempty, disjoint and cover 0..n-1 exactly
  /// once, and any exemplars are members of their clusters.
  bool is_valid(std::size_t node_count) const;

  /// Sorts members and orders clusters by smallest member. Exemplars follow
  /// their clusters.
  void normalize();
};

}  // namespace egf
