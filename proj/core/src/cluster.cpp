#include "egf/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace egf {

namespace {

using Index = Eigen::Index;

// Max out-degree of the flagged rows, counting only edges into flagged nodes.
int masked_support_norm(const Eigen::MatrixXd& w, const std::vector<bool>& rows,
                        const std::vector<bool>& cols) {
  int h = 0;
  for (Index i = 0; i < w.rows(); ++i) {
    if (!rows[static_cast<std::size_t>(i)]) continue;
    int deg = 0;
    for (Index j = 0; j < w.cols(); ++j) {
      if (cols[static_cast<std::size_t>(j)] && w(i, j) > 0.0) ++deg;
    }
    h = std::max(h, deg);
  }
  return h;
}

int conditional_h(const Eigen::MatrixXd& w, const std::vector<bool>& mask,
                  ConditionalNorm norm) {
  if (norm == ConditionalNorm::kUnionSubgraph) return binary_support(w).h;
  return masked_support_norm(w, mask, mask);
}

bool has_cross_edges(const WeightedDigraph& g, std::span<const std::size_t> a,
                     std::span<const std::size_t> b) {
  for (std::size_t i : a) {
    for (std::size_t j : b) {
      if (g(i, j) > 0.0 || g(j, i) > 0.0) return true;
    }
  }
  return false;
}

void check_disjoint_nonempty(std::span<const std::size_t> ca, std::span<const std::size_t> cb,
                             std::size_t n) {
  if (ca.empty() || cb.empty()) throw std::invalid_argument("affinity: empty cluster");
  std::vector<char> seen(n, 0);
  for (std::size_t v : ca) {
    if (v >= n) throw std::invalid_argument("affinity: node out of range");
    seen[v] = 1;
  }
  for (std::size_t v : cb) {
    if (v >= n) throw std::invalid_argument("affinity: node out of range");
    if (seen[v]) throw std::invalid_argument("affinity: clusters overlap");
  }
}

// Affinity with the standalone descriptors already known. The pair is put
// in a canonical order first so that swapping the arguments cannot change a
// single bit of the result.
double affinity_given(const WeightedDigraph& g, std::span<const std::size_t> ca,
                      std::span<const std::size_t> cb, double phi_a, double phi_b,
                      const ClusterOptions& opts) {
  if (*std::min_element(cb.begin(), cb.end()) < *std::min_element(ca.begin(), ca.end())) {
    std::swap(ca, cb);
    std::swap(phi_a, phi_b);
  }

  std::vector<std::size_t> nodes(ca.begin(), ca.end());
  nodes.insert(nodes.end(), cb.begin(), cb.end());
  std::sort(nodes.begin(), nodes.end());
  std::vector<bool> in_a(nodes.size(), false);
  {
    std::vector<std::size_t> sorted_a(ca.begin(), ca.end());
    std::sort(sorted_a.begin(), sorted_a.end());
    for (std::size_t t = 0; t < nodes.size(); ++t) {
      in_a[t] = std::binary_search(sorted_a.begin(), sorted_a.end(), nodes[t]);
    }
  }
  std::vector<bool> in_b(in_a.size());
  for (std::size_t t = 0; t < in_a.size(); ++t) in_b[t] = !in_a[t];

  const WeightedDigraph g_union = g.subgraph(nodes);
  double cond_a = 0.0;
  double cond_b = 0.0;
  if (has_cross_edges(g, ca, cb)) {
    cond_a = conditional_descriptor(g_union, in_a, opts);
    cond_b = conditional_descriptor(g_union, in_b, opts);
  } else {
    // e^W of a block-diagonal union is block diagonal: the conditional sum
    // equals the standalone one and only the normalisation can differ.
    const Eigen::MatrixXd& w = g_union.weights();
    const int ha = masked_support_norm(w, in_a, in_a);
    const int hb = masked_support_norm(w, in_b, in_b);
    cond_a = phi_a * std::exp(static_cast<double>(ha - conditional_h(w, in_a, opts.norm)));
    cond_b = phi_b * std::exp(static_cast<double>(hb - conditional_h(w, in_b, opts.norm)));
  }
  return (cond_a - phi_a) + (cond_b - phi_b);
}

void insert_sorted(std::vector<std::vector<std::size_t>>& clusters,
                   std::vector<std::size_t> cluster) {
  auto pos = std::lower_bound(
      clusters.begin(), clusters.end(), cluster.front(),
      [](const std::vector<std::size_t>& c, std::size_t v) { return c.front() < v; });
  clusters.insert(pos, std::move(cluster));
}

}  // namespace

double conditional_descriptor(const WeightedDigraph& g_union,
                              const std::vector<bool>& member_mask,
                              const ClusterOptions& opts) {
  if (member_mask.size() != g_union.size()) {
    throw std::invalid_argument("conditional_descriptor: mask size does not match graph");
  }
  const auto members =
      static_cast<std::size_t>(std::count(member_mask.begin(), member_mask.end(), true));
  if (members == 0) throw std::invalid_argument("conditional_descriptor: empty mask");

  const Eigen::MatrixXd& w = g_union.weights();
  const int h = conditional_h(w, member_mask, opts.norm);
  Eigen::VectorXd m(w.rows());
  for (Index i = 0; i < m.size(); ++i) m(i) = member_mask[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
  const Eigen::VectorXd action = exp_action(w, h, m, opts.series);
  return m.dot(action) / static_cast<double>(members);
}

double set_descriptor(const WeightedDigraph& g, std::span<const std::size_t> nodes,
                      const SeriesOptions& opts) {
  if (nodes.empty()) throw std::invalid_argument("set_descriptor: empty node set");
  return node_descriptor(g.subgraph(nodes), opts).phi_set;
}

double affinity(const WeightedDigraph& g, std::span<const std::size_t> ca,
                std::span<const std::size_t> cb, const ClusterOptions& opts) {
  check_disjoint_nonempty(ca, cb, g.size());
  const double phi_a = set_descriptor(g, ca, opts.series);
  const double phi_b = set_descriptor(g, cb, opts.series);
  return affinity_given(g, ca, cb, phi_a, phi_b, opts);
}

Partition agglomerate(const WeightedDigraph& g, Partition initial, std::size_t target_k,
                      const ClusterOptions& opts) {
  initial.exemplars.clear();
  if (!initial.is_valid(g.size())) {
    throw std::invalid_argument("agglomerate: initial partition does not cover the graph");
  }
  if (target_k == 0) throw std::invalid_argument("agglomerate: target_k must be >= 1");
  if (target_k > initial.size()) {
    throw std::invalid_argument("agglomerate: target_k (" + std::to_string(target_k) +
                                ") exceeds the initial cluster count (" +
                                std::to_string(initial.size()) + ")");
  }
  initial.normalize();

  // Values depend only on W restricted to the two clusters, so they stay
  // valid until one of the clusters is merged away. Keyed by smallest member.
  std::map<std::size_t, double> phi;
  std::map<std::pair<std::size_t, std::size_t>, double> cached;
  auto phi_of = [&](const std::vector<std::size_t>& c) {
    auto [it, inserted] = phi.try_emplace(c.front(), 0.0);
    if (inserted) it->second = set_descriptor(g, c, opts.series);
    return it->second;
  };

  Partition p = std::move(initial);
  while (p.size() > target_k) {
    MergeEvent best{0, 0, -std::numeric_limits<double>::infinity()};
    bool found = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        const auto key = std::make_pair(p.clusters[i].front(), p.clusters[j].front());
        auto it = cached.find(key);
        if (it == cached.end()) {
          const double value = affinity_given(g, p.clusters[i], p.clusters[j],
                                              phi_of(p.clusters[i]), phi_of(p.clusters[j]), opts);
          it = cached.emplace(key, value).first;
        }
        if (!found || it->second > best.affinity) {
          best = {i, j, it->second};
          found = true;
        }
      }
    }

    std::vector<std::size_t> merged = p.clusters[best.first];
    const auto& other = p.clusters[best.second];
    merged.insert(merged.end(), other.begin(), other.end());
    std::sort(merged.begin(), merged.end());
    const std::size_t lost_a = p.clusters[best.first].front();
    const std::size_t lost_b = other.front();
    std::erase_if(cached, [&](const auto& entry) {
      const auto& [a, b] = entry.first;
      return a == lost_a || a == lost_b || b == lost_a || b == lost_b;
    });
    phi.erase(lost_a);
    phi.erase(lost_b);

    p.clusters.erase(p.clusters.begin() + static_cast<std::ptrdiff_t>(best.second));
    p.clusters.erase(p.clusters.begin() + static_cast<std::ptrdiff_t>(best.first));
    insert_sorted(p.clusters, std::move(merged));
    if (opts.on_merge) opts.on_merge(p, best);
  }

  p.exemplars.reserve(p.size());
  for (const auto& c : p.clusters) p.exemplars.push_back(exemplar(g, c, opts.series));
  return p;
}

Partition agglomerate(const WeightedDigraph& g, const WeightedDigraph& seed_graph,
                      std::size_t target_k, const ClusterOptions& opts) {
  if (seed_graph.size() != g.size()) {
    throw std::invalid_argument("agglomerate: seed graph size differs from affinity graph");
  }
  return agglomerate(g, weakly_connected_components(seed_graph), target_k, opts);
}

std::size_t exemplar(const DescriptorResult& d) {
  const Index n = d.z.rows();
  if (n == 0) throw std::invalid_argument("exemplar: empty cluster");
  const Eigen::VectorXd score = d.z.rowwise().sum() + d.z.colwise().sum().transpose();
  Index best = 0;
  for (Index i = 1; i < n; ++i) {
    // Scores within 1e-12 relative of the leader count as ties.
    if (score(i) > score(best) * (1.0 + 1e-12)) best = i;
  }
  return static_cast<std::size_t>(best);
}

std::size_t exemplar(const WeightedDigraph& g, std::span<const std::size_t> nodes,
                     const SeriesOptions& opts) {
  if (nodes.empty()) throw std::invalid_argument("exemplar: empty cluster");
  return nodes[exemplar(descriptor(g.subgraph(nodes), opts))];
}

Partition cluster_points(const PointSet& points, const PointClusteringParams& params,
                         const ClusterOptions& opts) {
  const std::size_t n = points.size();
  if (params.target_k == 0) throw std::invalid_argument("cluster_points: target_k must be >= 1");
  if (n == 1) {
    if (params.target_k > 1) {
      throw std::invalid_argument("cluster_points: target_k exceeds the number of points");
    }
    Partition p;
    p.clusters = {{0}};
    p.exemplars = {0};
    return p;
  }
  const std::size_t k = std::min(params.k, n - 1);
  const std::size_t k0 = std::min(params.k0, n - 1);
  const WeightedDigraph g = knn_graph(points, k, params.bandwidth_scale);
  const WeightedDigraph seed = knn_graph(points, k0, params.bandwidth_scale);
  return agglomerate(g, seed, params.target_k, opts);
}

}  // namespace egf
