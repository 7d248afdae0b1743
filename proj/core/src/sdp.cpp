#include "egf/sdp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "egf/graph.hpp"
#include "egf/pathint.hpp"

namespace egf {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_coordinate(double x, double box) {
  x = std::fmod(x, box);
  if (x < 0.0) x += box;
  // fmod of a tiny negative plus box can round up to box itself.
  if (x >= box) x = 0.0;
  return x;
}

// Into [-pi, pi).
double wrap_angle(double theta) {
  theta = std::remainder(theta, 2.0 * kPi);
  if (theta >= kPi) theta -= 2.0 * kPi;
  return theta;
}

double min_image(double d, double box) { return d - box * std::round(d / box); }

}  // namespace

void ParticleState::validate() const {
  if (positions.size() != headings.size()) {
    throw std::invalid_argument("ParticleState: positions and headings differ in length");
  }
  if (!(box_size > 0.0)) throw std::invalid_argument("ParticleState: box_size must be > 0");
  if (!(speed > 0.0)) throw std::invalid_argument("ParticleState: speed must be > 0");
  if (!(interaction_radius > 0.0)) {
    throw std::invalid_argument("ParticleState: interaction_radius must be > 0");
  }
  if (!(noise_level >= 0.0 && noise_level <= 1.0)) {
    throw std::invalid_argument("ParticleState: noise_level must lie in [0, 1]");
  }
  for (const Vec2& p : positions) {
    if (!(p.x >= 0.0 && p.x < box_size && p.y >= 0.0 && p.y < box_size)) {
      throw std::invalid_argument("ParticleState: position outside [0, L)");
    }
  }
  for (double t : headings) {
    if (!std::isfinite(t)) throw std::invalid_argument("ParticleState: non-finite heading");
  }
}

double periodic_distance_squared(const Vec2& a, const Vec2& b, double box) {
  const double dx = min_image(a.x - b.x, box);
  const double dy = min_image(a.y - b.y, box);
  return dx * dx + dy * dy;
}

void SdpParams::validate() const {
  if (n < 2) throw std::invalid_argument("SdpParams: n must be >= 2");
  if (k < 1 || k >= n) throw std::invalid_argument("SdpParams: need 1 <= K <= n-1");
  if (!(box_size > 0.0)) throw std::invalid_argument("SdpParams: L must be > 0");
  if (!(speed > 0.0)) throw std::invalid_argument("SdpParams: speed must be > 0");
  if (!(radius > 0.0)) throw std::invalid_argument("SdpParams: r must be > 0");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("SdpParams: eta must lie in [0, 1]");
  if (frames < 1) throw std::invalid_argument("SdpParams: frames must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("SdpParams: tol must be > 0");
  if (z_reg && !(*z_reg > 0.0)) throw std::invalid_argument("SdpParams: z_reg must be > 0");
}

std::vector<double> ExperimentSeries::gt() const {
  std::vector<double> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(f.gt_order);
  return out;
}

std::vector<double> ExperimentSeries::proposed() const {
  std::vector<double> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(f.phi_proposed);
  return out;
}

std::vector<double> ExperimentSeries::baseline() const {
  std::vector<double> out;
  out.reserve(frames.size());
  for (const auto& f : frames) out.push_back(f.phi_baseline);
  return out;
}

ParticleState init_state(std::size_t n, double box_size, double speed, double radius,
                         double eta, Rng& rng) {
  if (n < 2) throw std::invalid_argument("init_state: n must be >= 2");
  ParticleState s;
  s.box_size = box_size;
  s.speed = speed;
  s.interaction_radius = radius;
  s.noise_level = eta;
  s.positions.resize(n);
  s.headings.resize(n);
  for (auto& p : s.positions) {
    p.x = wrap_coordinate(rng.uniform(0.0, box_size), box_size);
    p.y = wrap_coordinate(rng.uniform(0.0, box_size), box_size);
  }
  for (double& t : s.headings) t = rng.uniform(-kPi, kPi);
  s.validate();
  return s;
}

ParticleState init_state(std::size_t n, double box_size, double speed, double radius,
                         double eta, std::uint64_t seed) {
  Rng rng(seed);
  return init_state(n, box_size, speed, radius, eta, rng);
}

ParticleState step(const ParticleState& state, Rng& rng) {
  const std::size_t n = state.size();
  const double r2 = state.interaction_radius * state.interaction_radius;

  std::vector<double> cosines(n);
  std::vector<double> sines(n);
  for (std::size_t j = 0; j < n; ++j) {
    cosines[j] = std::cos(state.headings[j]);
    sines[j] = std::sin(state.headings[j]);
  }

  ParticleState next = state;
  for (std::size_t i = 0; i < n; ++i) {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || periodic_distance_squared(state.positions[i], state.positions[j],
                                              state.box_size) <= r2) {
        sx += cosines[j];
        sy += sines[j];
      }
    }
    const double noise = (2.0 * rng.uniform() - 1.0) * state.noise_level * kPi;
    next.headings[i] = wrap_angle(std::atan2(sy, sx) + noise);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vec2& p = next.positions[i];
    p.x = wrap_coordinate(p.x + state.speed * std::cos(next.headings[i]), state.box_size);
    p.y = wrap_coordinate(p.y + state.speed * std::sin(next.headings[i]), state.box_size);
  }
  ++next.frame;
  return next;
}

double order_parameter(const ParticleState& state) {
  const std::size_t n = state.size();
  if (n == 0) throw std::invalid_argument("order_parameter: empty state");
  double sx = 0.0;
  double sy = 0.0;
  for (double t : state.headings) {
    sx += std::cos(t);
    sy += std::sin(t);
  }
  return std::min(std::hypot(sx, sy) / static_cast<double>(n), 1.0);
}

ExperimentSeries run_experiment(const SdpParams& params) {
  params.validate();
  Rng rng(params.seed);
  ParticleState state = init_state(params.n, params.box_size, params.speed, params.radius,
                                   params.eta, rng);
  ExperimentSeries series;
  series.params = params;
  series.frames.reserve(params.frames);
  const SeriesOptions series_opts{.tol = params.tol};
  for (std::size_t f = 1; f <= params.frames; ++f) {
    const WeightedDigraph g = velocity_knn_graph(state, params.k);
    FrameRecord rec;
    rec.frame = f;
    rec.gt_order = order_parameter(state);
    rec.phi_proposed = node_descriptor(g, series_opts).phi_set;
    rec.phi_baseline = baseline_collectiveness(g, params.z_reg);
    series.frames.push_back(rec);
    if (f < params.frames) state = step(state, rng);
  }
  return series;
}

}  // namespace egf
