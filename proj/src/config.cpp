#include "aqsl/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aqsl/error.hpp"
#include "aqsl/metrics.hpp"

namespace aqsl {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(out)) {
    throw Error(ErrorCode::ConfigError, std::string(key) + ": not a number: '" + text + "'");
  }
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::ConfigError, std::string(key) + ": not a nonnegative integer: '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw Error(ErrorCode::ConfigError, std::string(key) + ": expected a boolean");
}

void require_one_of(std::string_view key, std::string_view value, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed)
    if (value == a) return;
  throw Error(ErrorCode::ConfigError, std::string(key) + ": unsupported value '" + std::string(value) + "'");
}

}  // namespace

void apply_setting(Config& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "beta") c.beta = parse_double(key, value);
  else if (key == "theta") c.theta = parse_double(key, value);
  else if (key == "theta_points") c.theta_points = parse_count(key, value);
  else if (key == "n_time") c.n_time = parse_count(key, value);
  else if (key == "tau") c.tau = parse_double(key, value);
  else if (key == "metric") {
    if (value != "all") parse_metric(value);
    c.metric = std::string(value);
  } else if (key == "out_dir") c.out_dir = std::string(value);
  else if (key == "solver") {
    require_one_of(key, value, {"pgd", "arclength"});
    c.solver = std::string(value);
  } else if (key == "max_iters") c.max_iters = parse_count(key, value);
  else if (key == "tol") c.tol = parse_double(key, value);
  else if (key == "ramp") {
    require_one_of(key, value, {"uniform", "exponential", "arclength"});
    c.ramp = std::string(value);
  } else if (key == "initial_state") {
    require_one_of(key, value, {"pure", "steady"});
    c.initial_state = std::string(value);
  } else if (key == "horizon") c.horizon = parse_double(key, value);
  else if (key == "profile_points") c.profile_points = parse_count(key, value);
  else if (key == "history") c.history = parse_bool(key, value);
  else if (key == "quiet") c.quiet = parse_bool(key, value);
  else throw Error(ErrorCode::ConfigError, "unknown key '" + std::string(key) + "'");
}

Config parse_config(std::string_view text, Config base) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(base, view.substr(0, eq), view.substr(eq + 1));
  }
  return base;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), std::move(base));
}

void validate(const Config& c) {
  const auto fail = [](const std::string& msg) { throw Error(ErrorCode::ConfigError, msg); };
  if (!std::isfinite(c.beta) || std::abs(c.beta) > 15.0) fail("beta must lie in [-15, 15]");
  if (c.n_time < 100) fail("n_time must be at least 100");
  if (!(c.tau > 0.0)) fail("tau must be positive");
  if (c.theta_points == 1) fail("theta_points must be 0 (default) or at least 2");
  if (c.max_iters == 0) fail("max_iters must be positive");
  if (!(c.tol > 0.0)) fail("tol must be positive");
  if (!(c.horizon > 0.0)) fail("horizon must be positive");
  if (c.out_dir.empty()) fail("out_dir must not be empty");
}

}  // namespace aqsl
