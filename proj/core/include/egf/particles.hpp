#pragma once

#include <cstdint>
#include <vector>

namespace egf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Snapshot of N self-driven particles in a periodic L x L box.
///
/// Every particle moves with the same constant `speed` along its heading.
/// Positions live in [0, L) on both axes; headings are radians in [-pi, pi).
struct ParticleState {
  std::vector<Vec2> positions;
  std::vector<double> headings;
  double speed = 0.03;
  double box_size = 7.0;
  double interaction_radius = 1.0;
  double noise_level = 0.0;
  std::uint64_t frame = 0;

  std::size_t size() const { return headings.size(); }

  /// Throws std::invalid_argument when a field breaks the state invariants.
  void validate() const;
};

/// Squared distance between a and b under the minimum-image convention on a
/// torus of side `box`.
double periodic_distance_squared(const Vec2& a, const Vec2& b, double box);

}  // namespace egf
