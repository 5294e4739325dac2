#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace aqsl {

/// Experiment settings. Read from a flat `key = value` file (one pair per
/// line, `#` starts a comment) and then overridden from the command line.
struct Config {
  double beta = 0.5;
  std::optional<double> theta;      // single-run commands; defaults to pi/3
  std::size_t theta_points = 0;     // 0 selects the command default
  std::size_t n_time = 2000;
  double tau = 1.0;
  std::string metric = "all";       // qfi, wy, td or all
  std::string out_dir = ".";
  std::string solver = "pgd";       // pgd or arclength
  std::size_t max_iters = 100000;
  double tol = 1e-10;
  std::string ramp = "exponential"; // uniform, exponential or arclength
  std::string initial_state = "pure";  // pure or steady
  double horizon = 12.0;            // (gamma + Gamma) t at which the exponential clock is cut
  std::size_t profile_points = 5;
  bool history = false;
  bool quiet = false;
};

/// Sets one key. Throws ConfigError for unknown keys or unparsable values.
void apply_setting(Config& config, std::string_view key, std::string_view value);

Config parse_config(std::string_view text, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// Range checks shared by every command; throws ConfigError.
void validate(const Config& config);

}  // namespace aqsl
