#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egf/sdp.hpp"

namespace egf::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every tunable of the command-line runs. Keys in config files and flags on
/// the command line use the field names verbatim.
struct RunConfig {
  std::size_t n = 400;
  std::size_t K = 20;
  std::size_t k0 = 1;
  double L = 7.0;
  double speed = 0.03;
  double r = 1.0;
  double eta = 0.0;
  std::size_t frames = 100;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  std::size_t runs = 20;
  double bandwidth_scale = 1.0;
  std::optional<double> z_reg;  // unset means 0.5 / H
  std::size_t target_k = 3;
  int l_max = 100;
  std::vector<std::size_t> n_list = {200, 400, 500};

  /// True once seed came from a file or flag rather than the default.
  bool seed_given = false;

  bool operator==(const RunConfig& other) const;

  /// Throws ConfigError when a field falls outside its operation's domain.
  void validate() const;

  SdpParams sdp_params() const;
};

/// Names of every accepted key, in serialisation order.
const std::vector<std::string_view>& config_keys();

/// Sets one key from its textual value. Throws ConfigError on an unknown key
/// or an unparsable value.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses flat `key = value` lines (a TOML subset: `#` comments, optional
/// quotes, arrays as `[a, b]`). Unknown and repeated keys are rejected.
/// The result is not validated.
RunConfig parse_config(std::string_view text, RunConfig base = {});

/// Serialises every key so that parse_config reproduces the config exactly.
std::string to_config_text(const RunConfig& cfg);

}  // namespace egf::cli
