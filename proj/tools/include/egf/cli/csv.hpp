#pragma once

#include <istream>
#include <string>

#include "egf/graph.hpp"

namespace egf::cli {

/// Fixed six-decimal rendering used for every float column.
std::string format_fixed(double value);

/// Reads one point per row, comma separated. A first row that does not parse
/// as numbers is taken as a header. Throws std::runtime_error on ragged or
/// non-numeric data rows.
PointSet read_points_csv(std::istream& in);

}  // namespace egf::cli
