// Copyright 2026 The xstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>

namespace xstate::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string k(key);
  for (char& ch : k)
    if (ch == '-') ch = '_';
  return k;
}

}  // namespace

SweepConfig SweepConfig::defaults(SweepKind kind) {
  SweepConfig cfg;
  if (kind == SweepKind::kWerner) cfg.n_list = {1, 2, 3, 4, 5, 6};
  return cfg;
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

long long parse_integer(std::string_view key, std::string_view text) {
  text = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view text) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    const long long v = parse_integer(key, item);
    if (v < 1 || v > 1000) {
      throw ConfigError(std::string(key) + ": channel power " + std::to_string(v) +
                        " outside [1, 1000]");
    }
    out.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(view.substr(0, eq));
    const auto value = trim(view.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

void apply_setting(SweepConfig& cfg, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  if (key == "a") {
    cfg.a = parse_double(key, value);
  } else if (key == "b") {
    cfg.b = parse_double(key, value);
  } else if (key == "n") {
    cfg.n_list = parse_int_list(key, value);
  } else if (key == "c_abs_max") {
    cfg.c_abs_max = parse_double(key, value);
  } else if (key == "d_abs_max") {
    cfg.d_abs_max = parse_double(key, value);
  } else if (key == "steps") {
    cfg.steps = static_cast<int>(parse_integer(key, value));
  } else if (key == "p_min") {
    cfg.p_min = parse_double(key, value);
  } else if (key == "p_max") {
    cfg.p_max = parse_double(key, value);
  } else if (key == "p_steps") {
    cfg.p_steps = static_cast<int>(parse_integer(key, value));
  } else if (key == "c_phase") {
    cfg.c_phase = parse_double(key, value);
  } else if (key == "d_phase") {
    cfg.d_phase = parse_double(key, value);
  } else if (key == "output") {
    cfg.output = std::string(trim(value));
  } else if (key == "format") {
    const auto f = trim(value);
    if (f == "csv") {
      cfg.format = OutputFormat::kCsv;
    } else if (f == "json") {
      cfg.format = OutputFormat::kJson;
    } else {
      throw ConfigError("format: expected csv or json, got '" + std::string(f) + "'");
    }
  } else if (key == "seed") {
    const long long s = parse_integer(key, value);
    if (s < 0) throw ConfigError("seed: must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "grid_dirs") {
    cfg.grid_dirs = static_cast<int>(parse_integer(key, value));
  } else if (key == "random_dirs") {
    cfg.random_dirs = static_cast<int>(parse_integer(key, value));
  } else {
    throw ConfigError("unknown key '" + std::string(raw_key) + "'");
  }
}

void load_config_file(SweepConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  for (const auto& [k, v] : parse_key_values(in)) apply_setting(cfg, k, v);
}

void validate_config(const SweepConfig& cfg, SweepKind kind) {
  const auto finite = [](std::string_view name, double v) {
    if (!std::isfinite(v)) throw ConfigError(std::string(name) + ": must be finite");
  };
  if (cfg.n_list.empty()) throw ConfigError("n: list must not be empty");
  finite("a", cfg.a);
  finite("b", cfg.b);
  finite("c_phase", cfg.c_phase);
  finite("d_phase", cfg.d_phase);
  if (kind == SweepKind::kCd) {
    finite("c_abs_max", cfg.c_abs_max);
    finite("d_abs_max", cfg.d_abs_max);
    if (cfg.c_abs_max < 0.0) throw ConfigError("c_abs_max: must be >= 0");
    if (cfg.d_abs_max < 0.0) throw ConfigError("d_abs_max: must be >= 0");
    if (cfg.steps < 2) throw ConfigError("steps: must be >= 2");
  } else {
    finite("p_min", cfg.p_min);
    finite("p_max", cfg.p_max);
    if (cfg.p_max < cfg.p_min) throw ConfigError("p_max: must be >= p_min");
    if (cfg.p_steps < 2) throw ConfigError("p_steps: must be >= 2");
    if (cfg.grid_dirs < 0) throw ConfigError("grid_dirs: must be >= 0");
    if (cfg.random_dirs < 0) throw ConfigError("random_dirs: must be >= 0");
  }
}

}  // namespace xstate::cli
