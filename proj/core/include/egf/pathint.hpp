#pragma once

// Path-integral descriptors of weighted digraphs.
//
// For a graph with weights W and support infinity norm H the edge descriptor
// is Z = e^W / e^H, the node descriptor is the row sum of Z and the set
// descriptor is the mean node descriptor. Series are truncated at the first
// order whose certified tail bound is below the requested tolerance.

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "egf/graph.hpp"

namespace egf {

struct SeriesOptions {
  double tol = 1e-12;
  int max_order = 500;
};

struct DescriptorResult {
  Eigen::MatrixXd z;
  Eigen::VectorXd phi_node;
  double phi_set = 0.0;
  int h = 0;
  int truncation_order = 0;
  double residual_bound = 0.0;
};

/// Node and set descriptors without materialising Z.
struct NodeDescriptor {
  Eigen::VectorXd phi_node;
  double phi_set = 0.0;
  int h = 0;
  int truncation_order = 0;
  double residual_bound = 0.0;
};

struct LPathDescriptor {
  Eigen::MatrixXd tau;
  Eigen::VectorXd phi_l_node;
  double phi_l_set = 0.0;
  int l = 0;
};

struct CoefficientProfile {
  std::vector<double> component_norms;  // index 0 holds l = 1
  std::vector<double> alpha_tilde;      // index 0 holds l = 1
  int argmax_l = 0;
  int h = 0;
};

/// Sum over every length-l walk i -> ... -> j of the product of its weights,
/// by explicit enumeration. Throws std::invalid_argument when n^l > 1e7.
double path_integral_brute(const WeightedDigraph& g, std::size_t i,
                           std::size_t j, int l);

/// W^l with its node (row sum) and set (mean row sum) summaries.
LPathDescriptor lpath_descriptor(const WeightedDigraph& g, int l);

/// ln of the l-path set descriptor (1/n) 1^T W^l 1, computed with rescaling
/// so that large l does not overflow. Returns -inf when W^l vanishes.
double log_lpath_set(const WeightedDigraph& g, int l);

/// Entry-sum-norm bound on ||Z - Z_n|| where Z_n is the partial sum through
/// power n (the identity being power 0).
///
/// With D the number of edges and S the entry sum of W: for n < D - 2 the
/// bound is e^-H [sum_{l=n+1}^{D-1} S^l/l! + S^D/D! (D+1)/(D+1-S)], otherwise
/// e^-H S^(n+1)/(n+1)! (n+2)/(n+2-S). Throws std::domain_error when the
/// geometric tail does not converge (denominator <= 0).
double truncation_error_bound(const WeightedDigraph& g, int n_order);
double truncation_error_bound(const Eigen::MatrixXd& w, int h, int n_order);

/// e^-h sum_{l>n} r^l / l!, which bounds every entry of the dropped tail when
/// r is the largest weighted row sum. Infinite when the geometric tail
/// estimate does not apply (n + 2 <= r).
double row_sum_tail_bound(double r, int h, int n_order);

/// Full descriptor of g with H taken from its support.
DescriptorResult descriptor(const WeightedDigraph& g, const SeriesOptions& opts = {});

/// Descriptor of an arbitrary nonnegative matrix with an explicit H. Used for
/// matrices outside the graph invariants, such as W + I.
DescriptorResult descriptor(const Eigen::MatrixXd& w, int h,
                            const SeriesOptions& opts = {});

NodeDescriptor node_descriptor(const WeightedDigraph& g, const SeriesOptions& opts = {});
NodeDescriptor node_descriptor(const Eigen::MatrixXd& w, int h,
                               const SeriesOptions& opts = {});

/// e^-h e^W v by a truncated series of matrix-vector products. Returns the
/// truncation order and certified entrywise bound (scaled by max |v_i|)
/// through the out parameters when given.
Eigen::VectorXd exp_action(const Eigen::MatrixXd& w, int h, const Eigen::VectorXd& v,
                           const SeriesOptions& opts = {}, int* order = nullptr,
                           double* bound = nullptr);

/// Normalised Frobenius norms of e^-H W^l / l! for l = 1..l_max, together
/// with the rescaled coefficients H^(l-1) / (l! e^H).
CoefficientProfile coefficient_profile(const WeightedDigraph& g, int l_max);

/// H^(l-1) / (l! e^H) for l = 1..l_max.
std::vector<double> alpha_tilde(int h, int l_max);

/// Generating-function collectiveness of Zhou et al. (TPAMI 2014):
/// (1/n) 1^T ((I - zW)^-1 - I) 1, divided by its supremum zH / (1 - zH) so
/// the result lies in [0, 1]. z defaults to 0.5 / H, for which the
/// supremum is 1. Returns 0 for an edgeless graph.
double baseline_collectiveness(const WeightedDigraph& g,
                               std::optional<double> z_reg = std::nullopt);

}  // namespace egf
