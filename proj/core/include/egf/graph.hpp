#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "egf/partition.hpp"
#include "egf/particles.hpp"

namespace egf {

/// Dense weighted directed graph; entry (i, j) is the weight of edge i -> j.
///
/// Weights lie in [0, 1] and the diagonal is zero. The constructor enforces
/// both, so every WeightedDigraph in circulation is valid.
class WeightedDigraph {
 public:
  /// Edgeless graph on n nodes.
  explicit WeightedDigraph(std::size_t n);

  /// Throws std::invalid_argument unless `weights` is square, finite, within
  /// [0, 1] and has a zero diagonal.
  explicit WeightedDigraph(Eigen::MatrixXd weights);

  std::size_t size() const { return static_cast<std::size_t>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  double operator()(std::size_t i, std::size_t j) const {
    return weights_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Induced subgraph on `nodes`, in the order given.
  WeightedDigraph subgraph(std::span<const std::size_t> nodes) const;

 private:
  Eigen::MatrixXd weights_;
};

/// 0/1 support of a weight matrix and its infinity norm.
struct BinarySupport {
  Eigen::MatrixXi a;
  int h = 0;
};

/// n points in D dimensions, one row per point.
class PointSet {
 public:
  /// Throws std::invalid_argument when empty, zero-dimensional or non-finite.
  explicit PointSet(Eigen::MatrixXd coords);
  PointSet(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return static_cast<std::size_t>(coords_.rows()); }
  std::size_t dimension() const { return static_cast<std::size_t>(coords_.cols()); }
  const Eigen::MatrixXd& coords() const { return coords_; }

 private:
  Eigen::MatrixXd coords_;
};

/// K-nearest-neighbour graph over Euclidean points.
///
/// Row i has exactly k nonzeros, at the k nearest other points (distance ties
/// go to the smaller index). Edge weights use a Gaussian kernel
/// exp(-d^2 / sigma^2) where sigma^2 is `bandwidth_scale` times the mean
/// squared length of the retained edges. If every retained edge has length
/// zero all weights are 1.
WeightedDigraph knn_graph(const PointSet& points, std::size_t k,
                          double bandwidth_scale = 1.0);

/// Velocity-correlation K-NN graph of a particle snapshot.
///
/// Neighbours are the k spatially nearest particles under the periodic
/// minimum-image metric; w(i, j) = max(cos(theta_i - theta_j), 0).
WeightedDigraph velocity_knn_graph(const ParticleState& state, std::size_t k);

BinarySupport binary_support(const WeightedDigraph& g);
BinarySupport binary_support(const Eigen::MatrixXd& w);

/// Components of the undirected graph with edge i~j iff w(i,j) > 0 or
/// w(j,i) > 0, ordered by smallest member.
Partition weakly_connected_components(const WeightedDigraph& g);

}  // namespace egf
