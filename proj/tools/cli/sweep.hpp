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

// Parameter sweeps over the (|c|, |d|) plane and the Werner line.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "xstate/core.hpp"
#include "xstate/tomography.hpp"

namespace xstate::cli {

/// i-th of `steps` evenly spaced points on [lo, hi].
double grid_value(double lo, double hi, int steps, int i);

struct CdRow {
  double c_abs = 0.0;
  double d_abs = 0.0;
  int n = 1;
  bool valid = false;
  StateClass state_class = StateClass::kInvalidNotPSD;
  // Set only for valid channel images.
  std::optional<double> negativity;
  std::optional<double> concurrence;
  std::optional<double> s12;
  std::optional<double> i_n;

  friend bool operator==(const CdRow&, const CdRow&) = default;
};

struct WernerRow {
  double p = 0.0;
  int n = 1;
  bool valid = false;
  StateClass state_class = StateClass::kInvalidNotPSD;
  std::optional<double> i_n;
  std::vector<std::optional<double>> i_s;

  friend bool operator==(const WernerRow&, const WernerRow&) = default;
};

CdRow evaluate_cd_point(const SweepConfig& cfg, double c_abs, double d_abs, int n);

/// Rows for every n in cfg.n_list, then |c| ascending, then |d| ascending.
std::vector<CdRow> run_sweep_cd(const SweepConfig& cfg);

WernerRow evaluate_werner_point(double p, int n, std::span<const DirectionPair> dirs);

std::vector<DirectionPair> werner_directions(const SweepConfig& cfg);

/// Rows for every n in cfg.n_list, then p ascending.
std::vector<WernerRow> run_sweep_werner(const SweepConfig& cfg);

/// Re-evaluates `count` rows picked with `seed` through fresh single-point
/// calls and returns how many differ.
std::size_t spot_check_cd(const SweepConfig& cfg, const std::vector<CdRow>& rows,
                          std::uint64_t seed, std::size_t count = 32);
std::size_t spot_check_werner(const SweepConfig& cfg, const std::vector<WernerRow>& rows,
                              std::uint64_t seed, std::size_t count = 32);

inline constexpr const char* kCdCsvHeader =
    "c_abs,d_abs,n,valid,class,negativity,concurrence,s12,i_n";

std::string werner_csv_header(std::size_t dir_count);

void write_cd_csv(std::ostream& out, const std::vector<CdRow>& rows);
void write_cd_json(std::ostream& out, const SweepConfig& cfg, const std::vector<CdRow>& rows);
void write_werner_csv(std::ostream& out, const SweepConfig& cfg,
                      std::span<const DirectionPair> dirs, const std::vector<WernerRow>& rows);
void write_werner_json(std::ostream& out, const SweepConfig& cfg,
                       std::span<const DirectionPair> dirs, const std::vector<WernerRow>& rows);

}  // namespace xstate::cli
