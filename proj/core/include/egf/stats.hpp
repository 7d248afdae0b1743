#pragma once

#include <cstddef>
#include <span>

namespace egf {

/// Pearson product-moment correlation, clamped into [-1, 1].
///
/// Throws std::invalid_argument on a length mismatch or fewer than two
/// samples, and std::domain_error when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// Adjusted Rand index between two labelings of the same items.
double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace egf
