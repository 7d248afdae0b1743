#include "egf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egf {

std::vector<std::size_t> Partition::labels(std::size_t node_count) const {
  if (!is_valid(node_count)) {
    throw std::invalid_argument("Partition::labels: partition does not cover the nodes");
  }
  std::vector<std::size_t> out(node_count);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t v : clusters[c]) out[v] = c;
  }
  return out;
}

bool Partition::is_valid(std::size_t node_count) const {
  std::vector<char> seen(node_count, 0);
  std::size_t covered = 0;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) return false;
    for (std::size_t v : cluster) {
      if (v >= node_count || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != node_count) return false;
  if (!exemplars.empty()) {
    if (exemplars.size() != clusters.size()) return false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::find(clusters[c].begin(), clusters[c].end(), exemplars[c]) ==
          clusters[c].end()) {
        return false;
      }
    }
  }
  return true;
}

void Partition::normalize() {
  for (auto& cluster : clusters) std::sort(cluster.begin(), cluster.end());
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return clusters[a].front() < clusters[b].front();
  });
  std::vector<std::vector<std::size_t>> sorted;
  sorted.reserve(clusters.size());
  for (std::size_t c : order) sorted.push_back(std::move(clusters[c]));
  clusters = std::move(sorted);
  if (!exemplars.empty()) {
    std::vector<std::size_t> ex;
    ex.reserve(order.size());
    for (std::size_t c : order) ex.push_back(exemplars[c]);
    exemplars = std::move(ex);
  }
}

}  // namespace egf
