#pragma once

// Test-only reference computations. Nothing here calls into the egf
// descriptor code, so each helper is an independent check of it.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "egf/graph.hpp"
#include "egf/rng.hpp"

namespace egf::testing {

using Dense = std::vector<std::vector<long double>>;

inline Dense to_dense(const Eigen::MatrixXd& w) {
  Dense out(static_cast<std::size_t>(w.rows()),
            std::vector<long double>(static_cast<std::size_t>(w.cols())));
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    for (Eigen::Index j = 0; j < w.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = w(i, j);
    }
  }
  return out;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

inline Dense identity(std::size_t n) {
  Dense out(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0L;
  return out;
}

/// sum_{l=from}^{to} W^l / l! in long double with plain triple loops.
inline Dense series_terms(const Eigen::MatrixXd& w, int from, int to) {
  const Dense wd = to_dense(w);
  const std::size_t n = wd.size();
  Dense term = identity(n);
  Dense sum(n, std::vector<long double>(n, 0.0L));
  for (int l = 0; l <= to; ++l) {
    if (l > 0) {
      term = multiply(term, wd);
      for (auto& row : term) {
        for (auto& v : row) v /= l;
      }
    }
    if (l >= from) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sum[i][j] += term[i][j];
      }
    }
  }
  return sum;
}

/// e^-h * e^W by a 60-term long double series.
inline Dense exp_oracle(const Eigen::MatrixXd& w, int h, int order = 60) {
  Dense e = series_terms(w, 0, order);
  const long double scale = std::exp(-static_cast<long double>(h));
  for (auto& row : e) {
    for (auto& v : row) v *= scale;
  }
  return e;
}

inline long double entry_sum(const Dense& m) {
  long double s = 0.0L;
  for (const auto& row : m) {
    for (long double v : row) s += v;
  }
  return s;
}

inline int support_h(const Eigen::MatrixXd& w) {
  int h = 0;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    int deg = 0;
    for (Eigen::Index j = 0; j < w.cols(); ++j) deg += w(i, j) > 0.0 ? 1 : 0;
    h = std::max(h, deg);
  }
  return h;
}

/// Random zero-diagonal weight matrix; each off-diagonal edge present with
/// probability `density`, weight uniform in (0, 1] (or exactly 1 if binary).
inline Eigen::MatrixXd random_weights(Rng& rng, std::size_t n, double density,
                                      bool binary = false) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || rng.uniform() >= density) continue;
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          binary ? 1.0 : 1.0 - rng.uniform();
    }
  }
  return w;
}

/// Strongly connected: a random Hamiltonian cycle plus random extra edges.
inline Eigen::MatrixXd random_strongly_connected(Rng& rng, std::size_t n, double density) {
  Eigen::MatrixXd w = random_weights(rng, n, density);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.next() % (i + 1))]);
  }
  for (std::size_t t = 0; t < n; ++t) {
    const auto a = static_cast<Eigen::Index>(perm[t]);
    const auto b = static_cast<Eigen::Index>(perm[(t + 1) % n]);
    if (w(a, b) == 0.0) w(a, b) = 1.0 - rng.uniform();
  }
  return w;
}

/// Perron root of a nonnegative irreducible matrix by power iteration on
/// W + I (same eigenvector, root shifted by one, aperiodic).
inline double perron_root(const Eigen::MatrixXd& w, int max_iter = 200000,
                          double rel_tol = 1e-15) {
  const Eigen::Index n = w.rows();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n) / static_cast<double>(n);
  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXd next = w * v + v;
    const double s = next.sum();
    next /= s;
    const double prev = lambda;
    lambda = s - 1.0;
    v = next;
    if (it > 10 && std::abs(lambda - prev) <= rel_tol * std::abs(lambda)) break;
  }
  return lambda;
}

/// Indices of the k nearest other points of row i, by exhaustive sort of all
/// pairwise distances (ties to the smaller index).
inline std::vector<std::size_t> brute_knn(const Eigen::MatrixXd& x, std::size_t i,
                                          std::size_t k) {
  std::vector<std::pair<double, std::size_t>> all;
  for (Eigen::Index j = 0; j < x.rows(); ++j) {
    if (static_cast<std::size_t>(j) == i) continue;
    all.emplace_back((x.row(static_cast<Eigen::Index>(i)) - x.row(j)).squaredNorm(),
                     static_cast<std::size_t>(j));
  }
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < k; ++t) out.push_back(all[t].second);
  std::sort(out.begin(), out.end());
  return out;
}

inline double normal(Rng& rng) {
  // Box-Muller; 1 - u keeps the log argument away from zero.
  const double u = 1.0 - rng.uniform();
  const double v = rng.uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

struct Blobs {
  std::vector<std::vector<double>> points;
  std::vector<std::size_t> labels;
};

/// Isotropic 2-D Gaussian blobs centred `separation` apart on a triangle
/// (or a line for two blobs), unit standard deviation.
inline Blobs gaussian_blobs(std::uint64_t seed, std::size_t blobs, std::size_t per_blob,
                            double separation) {
  Rng rng(seed);
  const double cx[3] = {0.0, separation, 0.0};
  const double cy[3] = {0.0, 0.0, separation};
  Blobs out;
  for (std::size_t b = 0; b < blobs; ++b) {
    for (std::size_t i = 0; i < per_blob; ++i) {
      out.points.push_back({cx[b] + normal(rng), cy[b] + normal(rng)});
      out.labels.push_back(b);
    }
  }
  return out;
}

}  // namespace egf::testing
