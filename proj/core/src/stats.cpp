#include "egf/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace egf {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least two samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::domain_error("pearson: constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("adjusted_rand_index: length mismatch");
  const std::size_t n = a.size();
  auto choose2 = [](double m) { return m * (m - 1.0) / 2.0; };
  std::map<std::pair<std::size_t, std::size_t>, double> joint;
  std::map<std::size_t, double> rows;
  std::map<std::size_t, double> cols;
  for (std::size_t i = 0; i < n; ++i) {
    joint[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  double index = 0.0;
  for (const auto& [key, count] : joint) index += choose2(count);
  double sum_rows = 0.0;
  for (const auto& [key, count] : rows) sum_rows += choose2(count);
  double sum_cols = 0.0;
  for (const auto& [key, count] : cols) sum_cols += choose2(count);
  const double total = choose2(static_cast<double>(n));
  if (total == 0.0) return 1.0;
  const double expected = sum_rows * sum_cols / total;
  const double max_index = 0.5 * (sum_rows + sum_cols);
  // Both labelings trivial (all one cluster or all singletons): identical.
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace egf
