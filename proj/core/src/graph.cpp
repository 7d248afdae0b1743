#include "egf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace egf {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

// Indices of the k smallest keys in row, skipping `self`; ties go to the
// smaller index.
std::vector<std::size_t> nearest(const std::vector<double>& d2, std::size_t self,
                                 std::size_t k) {
  std::vector<std::size_t> order;
  order.reserve(d2.size() - 1);
  for (std::size_t j = 0; j < d2.size(); ++j) {
    if (j != self) order.push_back(j);
  }
  auto less = [&](std::size_t a, std::size_t b) {
    return d2[a] < d2[b] || (d2[a] == d2[b] && a < b);
  };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), less);
  order.resize(k);
  return order;
}

void check_k(std::size_t k, std::size_t n, const char* who) {
  if (k == 0 || k >= n) {
    throw std::invalid_argument(std::string(who) + ": need 1 <= k <= n-1 (k=" +
                                std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

WeightedDigraph::WeightedDigraph(std::size_t n)
    : weights_(Eigen::MatrixXd::Zero(idx(n), idx(n))) {}

WeightedDigraph::WeightedDigraph(Eigen::MatrixXd weights) : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols()) {
    throw std::invalid_argument("WeightedDigraph: weight matrix must be square");
  }
  for (Index i = 0; i < weights_.rows(); ++i) {
    for (Index j = 0; j < weights_.cols(); ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
        throw std::invalid_argument("WeightedDigraph: weights must lie in [0, 1]");
      }
    }
    if (weights_(i, i) != 0.0) {
      throw std::invalid_argument("WeightedDigraph: diagonal must be zero");
    }
  }
}

WeightedDigraph WeightedDigraph::subgraph(std::span<const std::size_t> nodes) const {
  const Index m = idx(nodes.size());
  Eigen::MatrixXd sub(m, m);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      sub(a, b) = weights_(idx(nodes[static_cast<std::size_t>(a)]),
                           idx(nodes[static_cast<std::size_t>(b)]));
    }
  }
  WeightedDigraph out(0);
  out.weights_ = std::move(sub);
  return out;
}

PointSet::PointSet(Eigen::MatrixXd coords) : coords_(std::move(coords)) {
  if (coords_.rows() < 1 || coords_.cols() < 1) {
    throw std::invalid_argument("PointSet: need at least one point of dimension >= 1");
  }
  if (!coords_.allFinite()) {
    throw std::invalid_argument("PointSet: coordinates must be finite");
  }
}

PointSet::PointSet(const std::vector<std::vector<double>>& rows)
    : PointSet([&] {
        if (rows.empty()) {
          throw std::invalid_argument("PointSet: need at least one point");
        }
        const std::size_t dim = rows.front().size();
        Eigen::MatrixXd m(idx(rows.size()), idx(dim));
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != dim) {
            throw std::invalid_argument("PointSet: rows have differing dimension");
          }
          for (std::size_t d = 0; d < dim; ++d) m(idx(i), idx(d)) = rows[i][d];
        }
        return m;
      }()) {}

WeightedDigraph knn_graph(const PointSet& points, std::size_t k, double bandwidth_scale) {
  const std::size_t n = points.size();
  check_k(k, n, "knn_graph");
  if (!(bandwidth_scale > 0.0) || !std::isfinite(bandwidth_scale)) {
    throw std::invalid_argument("knn_graph: bandwidth_scale must be positive");
  }
  const Eigen::MatrixXd& x = points.coords();

  std::vector<std::vector<std::size_t>> neighbours(n);
  std::vector<std::vector<double>> kept_d2(n);
  std::vector<double> d2(n);
  double sum_d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d2[j] = (x.row(idx(i)) - x.row(idx(j))).squaredNorm();
    neighbours[i] = nearest(d2, i, k);
    for (std::size_t j : neighbours[i]) {
      kept_d2[i].push_back(d2[j]);
      sum_d2 += d2[j];
    }
  }
  const double sigma2 = bandwidth_scale * sum_d2 / static_cast<double>(n * k);

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const double dd = kept_d2[i][t];
      w(idx(i), idx(neighbours[i][t])) = sigma2 > 0.0 ? std::exp(-dd / sigma2) : 1.0;
    }
  }
  return WeightedDigraph(std::move(w));
}

WeightedDigraph velocity_knn_graph(const ParticleState& state, std::size_t k) {
  state.validate();
  const std::size_t n = state.size();
  check_k(k, n, "velocity_knn_graph");

  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(idx(n), idx(n));
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d2[j] = periodic_distance_squared(state.positions[i], state.positions[j],
                                        state.box_size);
    }
    for (std::size_t j : nearest(d2, i, k)) {
      // Constant speed: the velocity cosine is the heading cosine.
      w(idx(i), idx(j)) = std::max(std::cos(state.headings[i] - state.headings[j]), 0.0);
    }
  }
  return WeightedDigraph(std::move(w));
}

BinarySupport binary_support(const Eigen::MatrixXd& w) {
  BinarySupport s;
  s.a = (w.array() > 0.0).cast<int>().matrix();
  s.h = s.a.rows() == 0 ? 0 : s.a.rowwise().sum().maxCoeff();
  return s;
}

BinarySupport binary_support(const WeightedDigraph& g) { return binary_support(g.weights()); }

Partition weakly_connected_components(const WeightedDigraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j) > 0.0) {
        const std::size_t a = find(i);
        const std::size_t b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  // Roots are the smallest member of their component, so scanning in index
  // order yields clusters ordered by smallest member.
  Partition p;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (slot[r] == n) {
      slot[r] = p.clusters.size();
      p.clusters.emplace_back();
    }
    p.clusters[slot[r]].push_back(v);
  }
  return p;
}

}  // namespace egf
