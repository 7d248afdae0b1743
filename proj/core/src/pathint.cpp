#include "egf/pathint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace egf {

namespace {

using Index = Eigen::Index;

constexpr double kInf = std::numeric_limits<double>::infinity();

Index idx(std::size_t i) { return static_cast<Index>(i); }

// s^l / l! in log space; s = 0 gives 0 for l >= 1.
double power_over_factorial(double s, int l) {
  if (l == 0) return 1.0;
  if (s == 0.0) return 0.0;
  return std::exp(l * std::log(s) - std::lgamma(l + 1.0));
}

void check_series(const SeriesOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("series tolerance must be positive");
  if (opts.max_order < 0) throw std::invalid_argument("series max_order must be >= 0");
}

// Largest weighted row sum.
double max_row_sum(const Eigen::MatrixXd& w) {
  return w.rows() == 0 ? 0.0 : w.rowwise().sum().maxCoeff();
}

// Property-6 bound, or +inf where its geometric tail does not converge.
double entry_sum_bound_or_inf(const Eigen::MatrixXd& w, int h, int n_order) {
  const double s = w.sum();
  const auto d = static_cast<long>((w.array() > 0.0).count());
  if (d == 0 || s == 0.0) return 0.0;
  const double scale = std::exp(-static_cast<double>(h));
  if (n_order < d - 2) {
    double head = 0.0;
    for (long l = n_order + 1; l <= d - 1; ++l) {
      head += power_over_factorial(s, static_cast<int>(l));
    }
    const double denom = static_cast<double>(d + 1) - s;
    if (!(denom > 0.0)) return kInf;
    const double tail =
        power_over_factorial(s, static_cast<int>(d)) * static_cast<double>(d + 1) / denom;
    return scale * (head + tail);
  }
  const double denom = static_cast<double>(n_order + 2) - s;
  if (!(denom > 0.0)) return kInf;
  return scale * power_over_factorial(s, n_order + 1) * (n_order + 2) / denom;
}

[[noreturn]] void throw_cap(int max_order, double bound, double tol) {
  throw std::runtime_error("series did not reach tolerance " + std::to_string(tol) +
                           " within " + std::to_string(max_order) +
                           " terms (tail bound " + std::to_string(bound) + ")");
}

}  // namespace

double path_integral_brute(const WeightedDigraph& g, std::size_t i, std::size_t j, int l) {
  const std::size_t n = g.size();
  if (i >= n || j >= n) throw std::invalid_argument("path_integral_brute: node out of range");
  if (l < 1) throw std::invalid_argument("path_integral_brute: l must be >= 1");
  if (std::pow(static_cast<double>(n), l) > 1e7) {
    throw std::invalid_argument("path_integral_brute: n^l exceeds the enumeration guard");
  }
  // Walk every sequence of l-1 intermediate nodes like an odometer.
  std::vector<std::size_t> mid(static_cast<std::size_t>(l - 1), 0);
  double total = 0.0;
  while (true) {
    double product = 1.0;
    std::size_t prev = i;
    for (std::size_t v : mid) {
      product *= g(prev, v);
      prev = v;
    }
    product *= g(prev, j);
    total += product;

    std::size_t pos = 0;
    while (pos < mid.size() && ++mid[pos] == n) mid[pos++] = 0;
    if (pos == mid.size()) break;
  }
  return total;
}

LPathDescriptor lpath_descriptor(const WeightedDigraph& g, int l) {
  if (l < 1) throw std::invalid_argument("lpath_descriptor: l must be >= 1");
  const Eigen::MatrixXd& w = g.weights();
  LPathDescriptor out;
  out.l = l;
  out.tau = w;
  for (int p = 1; p < l; ++p) out.tau = out.tau * w;
  out.phi_l_node = out.tau.rowwise().sum();
  out.phi_l_set = g.size() == 0 ? 0.0 : out.phi_l_node.sum() / static_cast<double>(g.size());
  return out;
}

double log_lpath_set(const WeightedDigraph& g, int l) {
  if (l < 1) throw std::invalid_argument("log_lpath_set: l must be >= 1");
  const Index n = idx(g.size());
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double log_scale = 0.0;
  for (int p = 0; p < l; ++p) {
    v = g.weights() * v;
    const double m = v.maxCoeff();
    if (m <= 0.0) return -kInf;
    v /= m;
    log_scale += std::log(m);
  }
  return log_scale + std::log(v.sum() / static_cast<double>(n));
}

double truncation_error_bound(const Eigen::MatrixXd& w, int h, int n_order) {
  if (n_order < 0) throw std::invalid_argument("truncation_error_bound: n_order must be >= 0");
  const double bound = entry_sum_bound_or_inf(w, h, n_order);
  if (std::isinf(bound)) {
    throw std::domain_error(
        "truncation_error_bound: geometric tail diverges; raise n_order");
  }
  return bound;
}

double truncation_error_bound(const WeightedDigraph& g, int n_order) {
  return truncation_error_bound(g.weights(), binary_support(g).h, n_order);
}

double row_sum_tail_bound(double r, int h, int n_order) {
  if (r == 0.0) return 0.0;
  const double denom = static_cast<double>(n_order + 2) - r;
  if (!(denom > 0.0)) return kInf;
  return std::exp(-static_cast<double>(h)) * power_over_factorial(r, n_order + 1) *
         (n_order + 2) / denom;
}

DescriptorResult descriptor(const Eigen::MatrixXd& w, int h, const SeriesOptions& opts) {
  check_series(opts);
  if (w.rows() != w.cols()) throw std::invalid_argument("descriptor: matrix must be square");
  const Index n = w.rows();
  const double r = max_row_sum(w);

  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sum = term;
  int order = 0;
  double bound = std::min(row_sum_tail_bound(r, h, 0), entry_sum_bound_or_inf(w, h, 0));
  while (bound > opts.tol) {
    if (order >= opts.max_order) throw_cap(opts.max_order, bound, opts.tol);
    ++order;
    term = term * w / static_cast<double>(order);
    sum += term;
    bound = std::min(row_sum_tail_bound(r, h, order), entry_sum_bound_or_inf(w, h, order));
  }

  DescriptorResult out;
  out.z = sum * std::exp(-static_cast<double>(h));
  out.phi_node = out.z.rowwise().sum();
  out.phi_set = n == 0 ? 0.0 : out.phi_node.sum() / static_cast<double>(n);
  out.h = h;
  out.truncation_order = order;
  out.residual_bound = bound;
  return out;
}

DescriptorResult descriptor(const WeightedDigraph& g, const SeriesOptions& opts) {
  return descriptor(g.weights(), binary_support(g).h, opts);
}

Eigen::VectorXd exp_action(const Eigen::MatrixXd& w, int h, const Eigen::VectorXd& v,
                           const SeriesOptions& opts, int* order_out, double* bound_out) {
  check_series(opts);
  if (w.rows() != w.cols() || w.cols() != v.size()) {
    throw std::invalid_argument("exp_action: dimension mismatch");
  }
  const double r = max_row_sum(w);
  const double vmax = v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();

  Eigen::VectorXd term = v;
  Eigen::VectorXd sum = v;
  int order = 0;
  double bound = vmax * row_sum_tail_bound(r, h, 0);
  while (bound > opts.tol) {
    if (order >= opts.max_order) throw_cap(opts.max_order, bound, opts.tol);
    ++order;
    term = w * term / static_cast<double>(order);
    sum += term;
    bound = vmax * row_sum_tail_bound(r, h, order);
  }
  if (order_out) *order_out = order;
  if (bound_out) *bound_out = bound;
  return sum * std::exp(-static_cast<double>(h));
}

NodeDescriptor node_descriptor(const Eigen::MatrixXd& w, int h, const SeriesOptions& opts) {
  NodeDescriptor out;
  out.h = h;
  out.phi_node = exp_action(w, h, Eigen::VectorXd::Ones(w.rows()), opts,
                            &out.truncation_order, &out.residual_bound);
  out.phi_set = w.rows() == 0 ? 0.0 : out.phi_node.mean();
  return out;
}

NodeDescriptor node_descriptor(const WeightedDigraph& g, const SeriesOptions& opts) {
  return node_descriptor(g.weights(), binary_support(g).h, opts);
}

std::vector<double> alpha_tilde(int h, int l_max) {
  std::vector<double> out;
  if (l_max < 1) return out;
  out.reserve(static_cast<std::size_t>(l_max));
  // a_1 = e^-H and a_l / a_{l-1} = H / l, so a_{H-1} == a_H exactly.
  double a = std::exp(-static_cast<double>(h));
  out.push_back(a);
  for (int l = 2; l <= l_max; ++l) {
    a = a * h / l;
    out.push_back(a);
  }
  return out;
}

CoefficientProfile coefficient_profile(const WeightedDigraph& g, int l_max) {
  if (l_max < 1) throw std::invalid_argument("coefficient_profile: l_max must be >= 1");
  const Eigen::MatrixXd& w = g.weights();
  CoefficientProfile out;
  out.h = binary_support(g).h;
  const double scale = std::exp(-static_cast<double>(out.h));

  Eigen::MatrixXd term = w;  // W^l / l!
  out.component_norms.reserve(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l) {
    if (l > 1) term = term * w / static_cast<double>(l);
    out.component_norms.push_back(scale * term.norm());
  }
  double peak = 0.0;
  for (std::size_t i = 0; i < out.component_norms.size(); ++i) {
    if (out.component_norms[i] > peak) {
      peak = out.component_norms[i];
      out.argmax_l = static_cast<int>(i) + 1;
    }
  }
  if (peak > 0.0) {
    for (double& c : out.component_norms) c /= peak;
  } else {
    out.argmax_l = 1;
  }
  out.alpha_tilde = alpha_tilde(out.h, l_max);
  return out;
}

double baseline_collectiveness(const WeightedDigraph& g, std::optional<double> z_reg) {
  const int h = binary_support(g).h;
  if (h == 0) return 0.0;
  const double z = z_reg.value_or(0.5 / h);
  if (!(z > 0.0) || !(z * h < 1.0)) {
    throw std::invalid_argument("baseline_collectiveness: need 0 < z_reg < 1/H");
  }
  const Index n = idx(g.size());
  const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n) - z * g.weights();
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  if (!(lu.rcond() > 1e-12)) {
    throw std::runtime_error("baseline_collectiveness: I - zW is numerically singular");
  }
  const Eigen::VectorXd x = lu.solve(Eigen::VectorXd::Ones(n));
  const double raw = (x.sum() - static_cast<double>(n)) / static_cast<double>(n);
  const double supremum = z * h / (1.0 - z * h);
  return raw / supremum;
}

}  // namespace egf
