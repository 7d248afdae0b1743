#include "egf/cli/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace egf::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
  if (s.size() >= 2 && ((s.front() == '"' && s.back() == '"') ||
                        (s.front() == '\'' && s.back() == '\''))) {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
  throw ConfigError("invalid value for '" + std::string(key) + "': '" + std::string(value) + "'");
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view value) {
  value = trim(value);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  value = trim(value);
  const std::string text(value);
  if (text.empty()) bad_value(key, value);
  char* end = nullptr;
  errno = 0;
  const double out = std::strtod(text.c_str(), &end);
  if (errno != 0 || end != text.c_str() + text.size() || !std::isfinite(out)) {
    bad_value(key, value);
  }
  return out;
}

std::vector<std::size_t> parse_list(std::string_view key, std::string_view value) {
  value = trim(value);
  if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::size_t> out;
  while (!trim(value).empty()) {
    const auto comma = value.find(',');
    out.push_back(parse_unsigned(key, value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value = value.substr(comma + 1);
  }
  if (out.empty()) bad_value(key, value);
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

bool RunConfig::operator==(const RunConfig& o) const {
  return n == o.n && K == o.K && k0 == o.k0 && L == o.L && speed == o.speed && r == o.r &&
         eta == o.eta && frames == o.frames && seed == o.seed && tol == o.tol &&
         runs == o.runs && bandwidth_scale == o.bandwidth_scale && z_reg == o.z_reg &&
         target_k == o.target_k && l_max == o.l_max && n_list == o.n_list;
}

void RunConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
  };
  require(n >= 2, "n must be >= 2");
  require(K >= 1 && K < n, "K must satisfy 1 <= K <= n-1");
  require(k0 >= 1, "k0 must be >= 1");
  require(L > 0.0, "L must be > 0");
  require(speed > 0.0, "speed must be > 0");
  require(r > 0.0, "r must be > 0");
  require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0, 1]");
  require(frames >= 1, "frames must be >= 1");
  require(tol > 0.0, "tol must be > 0");
  require(runs >= 1, "runs must be >= 1");
  require(bandwidth_scale > 0.0, "bandwidth_scale must be > 0");
  require(!z_reg || *z_reg > 0.0, "z_reg must be > 0");
  require(target_k >= 1, "target_k must be >= 1");
  require(l_max >= 1, "l_max must be >= 1");
  require(!n_list.empty(), "n_list must not be empty");
  for (std::size_t v : n_list) require(v > K, "every n_list entry must exceed K");
}

SdpParams RunConfig::sdp_params() const {
  SdpParams p;
  p.n = n;
  p.k = K;
  p.box_size = L;
  p.speed = speed;
  p.radius = r;
  p.eta = eta;
  p.frames = frames;
  p.seed = seed;
  p.tol = tol;
  p.z_reg = z_reg;
  return p;
}

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = {
      "n",    "K",    "k0",   "L",    "speed",           "r",     "eta",      "frames",
      "seed", "tol",  "runs", "bandwidth_scale", "z_reg", "target_k", "l_max", "n_list"};
  return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view raw) {
  const std::string_view value = unquote(trim(raw));
  if (key == "n") cfg.n = parse_unsigned(key, value);
  else if (key == "K") cfg.K = parse_unsigned(key, value);
  else if (key == "k0") cfg.k0 = parse_unsigned(key, value);
  else if (key == "L") cfg.L = parse_double(key, value);
  else if (key == "speed") cfg.speed = parse_double(key, value);
  else if (key == "r") cfg.r = parse_double(key, value);
  else if (key == "eta") cfg.eta = parse_double(key, value);
  else if (key == "frames") cfg.frames = parse_unsigned(key, value);
  else if (key == "seed") {
    cfg.seed = parse_unsigned(key, value);
    cfg.seed_given = true;
  } else if (key == "tol") cfg.tol = parse_double(key, value);
  else if (key == "runs") cfg.runs = parse_unsigned(key, value);
  else if (key == "bandwidth_scale") cfg.bandwidth_scale = parse_double(key, value);
  else if (key == "z_reg") {
    if (value == "auto") cfg.z_reg.reset();
    else cfg.z_reg = parse_double(key, value);
  } else if (key == "target_k") cfg.target_k = parse_unsigned(key, value);
  else if (key == "l_max") {
    const auto v = parse_unsigned(key, value);
    if (v > 100000) bad_value(key, value);
    cfg.l_max = static_cast<int>(v);
  } else if (key == "n_list") cfg.n_list = parse_list(key, value);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig cfg) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    // A '#' inside quotes is not used by any key, so comments end the line.
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" +
                        std::string(key) + "'");
    }
    apply_setting(cfg, key, line.substr(eq + 1));
  }
  return cfg;
}

std::string to_config_text(const RunConfig& cfg) {
  std::ostringstream out;
  out << "n = " << cfg.n << '\n'
      << "K = " << cfg.K << '\n'
      << "k0 = " << cfg.k0 << '\n'
      << "L = " << format_double(cfg.L) << '\n'
      << "speed = " << format_double(cfg.speed) << '\n'
      << "r = " << format_double(cfg.r) << '\n'
      << "eta = " << format_double(cfg.eta) << '\n'
      << "frames = " << cfg.frames << '\n'
      << "seed = " << cfg.seed << '\n'
      << "tol = " << format_double(cfg.tol) << '\n'
      << "runs = " << cfg.runs << '\n'
      << "bandwidth_scale = " << format_double(cfg.bandwidth_scale) << '\n'
      << "z_reg = " << (cfg.z_reg ? format_double(*cfg.z_reg) : std::string("\"auto\"")) << '\n'
      << "target_k = " << cfg.target_k << '\n'
      << "l_max = " << cfg.l_max << '\n'
      << "n_list = [";
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    out << (i ? ", " : "") << cfg.n_list[i];
  }
  out << "]\n";
  return out.str();
}

}  // namespace egf::cli
