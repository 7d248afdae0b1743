#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "egf/particles.hpp"
#include "egf/rng.hpp"

namespace egf {

struct SdpParams {
  std::size_t n = 400;
  std::size_t k = 20;
  double box_size = 7.0;
  double speed = 0.03;
  double radius = 1.0;
  double eta = 0.0;
  std::size_t frames = 100;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  std::optional<double> z_reg;  // baseline regulariser; default 0.5 / H

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct FrameRecord {
  std::size_t frame = 0;  // 1-based
  double gt_order = 0.0;
  double phi_proposed = 0.0;
  double phi_baseline = 0.0;
};

struct ExperimentSeries {
  SdpParams params;
  std::vector<FrameRecord> frames;

  std::vector<double> gt() const;
  std::vector<double> proposed() const;
  std::vector<double> baseline() const;
};

/// Uniform positions in [0, L)^2 and headings in [-pi, pi).
ParticleState init_state(std::size_t n, double box_size, double speed, double radius,
                         double eta, Rng& rng);
ParticleState init_state(std::size_t n, double box_size, double speed, double radius,
                         double eta, std::uint64_t seed);

/// One synchronous Vicsek update: every heading becomes the circular mean of
/// the headings within the interaction radius (itself included) plus noise
/// uniform in [-eta*pi, eta*pi]; then particles move along their new
/// heading and wrap into the box. Noise is drawn in particle order.
ParticleState step(const ParticleState& state, Rng& rng);

/// Polar order |sum_i (cos theta_i, sin theta_i)| / n.
double order_parameter(const ParticleState& state);

/// Simulates `frames` frames. Frame f is measured on the state after f - 1
/// steps: ground-truth order, proposed descriptor and baseline, both on the
/// velocity K-NN graph.
ExperimentSeries run_experiment(const SdpParams& params);

}  // namespace egf
