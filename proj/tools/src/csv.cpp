#include "egf/cli/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

namespace egf::cli {

namespace {

std::optional<std::vector<double>> parse_row(const std::string& line) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    std::string field = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    if (first == std::string::npos) return std::nullopt;
    field = field.substr(first, last - first + 1);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(field.c_str(), &end);
    if (errno != 0 || end != field.c_str() + field.size() || !std::isfinite(v)) {
      return std::nullopt;
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

PointSet read_points_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto row = parse_row(line);
    if (!row) {
      if (first_content) {
        first_content = false;
        continue;  // header
      }
      throw std::runtime_error("points CSV line " + std::to_string(line_no) +
                               ": non-numeric field");
    }
    first_content = false;
    if (!rows.empty() && row->size() != rows.front().size()) {
      throw std::runtime_error("points CSV line " + std::to_string(line_no) +
                               ": column count differs from the first row");
    }
    rows.push_back(std::move(*row));
  }
  if (rows.empty()) throw std::runtime_error("points CSV holds no data rows");
  return PointSet(rows);
}

}  // namespace egf::cli
