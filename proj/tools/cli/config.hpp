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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xstate::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };

enum class SweepKind { kCd, kWerner };

struct SweepConfig {
  double a = 0.33;
  double b = 0.17;
  std::vector<int> n_list{2, 3, 4, 5};
  // |c|, |d| grid: [0, max] on each axis with `steps` points.
  double c_abs_max = 0.5;
  double d_abs_max = 0.5;
  int steps = 201;
  double p_min = 0.0;
  double p_max = 1.0;
  int p_steps = 401;
  double c_phase = 0.0;
  double d_phase = 0.0;
  std::string output;  // empty: standard output
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t seed = 2014;
  // Direction pairs for the Shannon-information columns.
  int grid_dirs = 2;
  int random_dirs = 2;

  static SweepConfig defaults(SweepKind kind);
};

/// Parses `key = value` lines. '#' starts a comment; blank lines are
/// skipped. Throws ConfigError naming the line on malformed input.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in);

/// Sets one field from its textual value. Keys use underscores
/// (c_abs_max); dashes are accepted as well.
void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value);

void load_config_file(SweepConfig& cfg, const std::string& path);

void validate_config(const SweepConfig& cfg, SweepKind kind);

double parse_double(std::string_view key, std::string_view text);
long long parse_integer(std::string_view key, std::string_view text);
std::vector<int> parse_int_list(std::string_view key, std::string_view text);

}  // namespace xstate::cli
