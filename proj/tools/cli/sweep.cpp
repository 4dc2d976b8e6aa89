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

#include "cli/sweep.hpp"

#include <json.hpp>
#include <ostream>
#include <random>

#include "cli/format.hpp"
#include "xstate/entanglement.hpp"
#include "xstate/information.hpp"
#include "xstate/sampling.hpp"

namespace xstate::cli {
namespace {

using nlohmann::json;

// Channel image, or nullopt when Tr rho^n vanishes.
std::optional<ChannelResult> try_channel(const XParams& p, int n) {
  try {
    return apply_power_channel(p, n);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kZeroDenominator) return std::nullopt;
    throw;
  }
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json directions_json(std::span<const DirectionPair> dirs) {
  json out = json::array();
  for (const auto& d : dirs) {
    out.push_back({{"theta_a", d.a.theta},
                   {"phi_a", d.a.phi},
                   {"psi_a", d.a.psi},
                   {"theta_b", d.b.theta},
                   {"phi_b", d.b.phi},
                   {"psi_b", d.b.psi}});
  }
  return out;
}

json thresholds_json(const std::vector<int>& n_list) {
  json out = json::array();
  for (int n : n_list) {
    const auto t = werner_entanglement_threshold(n);
    json item{{"n", n}, {"p_star", t.upper}};
    item["p_lower"] = t.lower ? json(*t.lower) : json(nullptr);
    out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> pick_indices(std::size_t size, std::uint64_t seed, std::size_t count) {
  std::vector<std::size_t> out;
  if (size == 0) return out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) out.push_back(rng() % size);
  return out;
}

}  // namespace

double grid_value(double lo, double hi, int steps, int i) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

CdRow evaluate_cd_point(const SweepConfig& cfg, double c_abs, double d_abs, int n) {
  CdRow row;
  row.c_abs = c_abs;
  row.d_abs = d_abs;
  row.n = n;
  const auto input = XParams::from_polar(cfg.a, cfg.b, c_abs, cfg.c_phase, d_abs, cfg.d_phase);
  const auto image = try_channel(input, n);
  if (!image || !image->valid || !is_valid(image->params)) {
    row.valid = false;
    row.state_class = image ? classify(image->params) : StateClass::kInvalidNotPSD;
    if (row.state_class == StateClass::kSeparable || row.state_class == StateClass::kEntangled) {
      row.state_class = StateClass::kInvalidNotPSD;
    }
    return row;
  }
  row.valid = true;
  const auto ent = entanglement_report(image->params);
  const auto info = system_entropies(image->params);
  row.state_class = ent.state_class;
  row.negativity = ent.negativity;
  row.concurrence = ent.concurrence;
  row.s12 = info.s12;
  row.i_n = info.i_n;
  return row;
}

std::vector<CdRow> run_sweep_cd(const SweepConfig& cfg) {
  validate_config(cfg, SweepKind::kCd);
  std::vector<CdRow> rows;
  rows.reserve(cfg.n_list.size() * static_cast<std::size_t>(cfg.steps) *
               static_cast<std::size_t>(cfg.steps));
  for (int n : cfg.n_list) {
    for (int i = 0; i < cfg.steps; ++i) {
      const double c_abs = grid_value(0.0, cfg.c_abs_max, cfg.steps, i);
      for (int j = 0; j < cfg.steps; ++j) {
        const double d_abs = grid_value(0.0, cfg.d_abs_max, cfg.steps, j);
        rows.push_back(evaluate_cd_point(cfg, c_abs, d_abs, n));
      }
    }
  }
  return rows;
}

WernerRow evaluate_werner_point(double p, int n, std::span<const DirectionPair> dirs) {
  WernerRow row;
  row.p = p;
  row.n = n;
  row.i_s.assign(dirs.size(), std::nullopt);
  const auto image = try_channel(werner(p), n);
  if (!image || !image->valid || !is_valid(image->params)) {
    row.valid = false;
    row.state_class = StateClass::kInvalidNotPSD;
    return row;
  }
  row.valid = true;
  row.state_class = classify(image->params);
  row.i_n = system_entropies(image->params).i_n;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    row.i_s[k] = shannon_report(image->params, dirs[k].a, dirs[k].b).i_s;
  }
  return row;
}

std::vector<DirectionPair> werner_directions(const SweepConfig& cfg) {
  return sample_direction_pairs(static_cast<std::size_t>(cfg.grid_dirs),
                                static_cast<std::size_t>(cfg.random_dirs), cfg.seed);
}

std::vector<WernerRow> run_sweep_werner(const SweepConfig& cfg) {
  validate_config(cfg, SweepKind::kWerner);
  const auto dirs = werner_directions(cfg);
  std::vector<WernerRow> rows;
  rows.reserve(cfg.n_list.size() * static_cast<std::size_t>(cfg.p_steps));
  for (int n : cfg.n_list) {
    for (int i = 0; i < cfg.p_steps; ++i) {
      rows.push_back(evaluate_werner_point(grid_value(cfg.p_min, cfg.p_max, cfg.p_steps, i), n,
                                           dirs));
    }
  }
  return rows;
}

std::size_t spot_check_cd(const SweepConfig& cfg, const std::vector<CdRow>& rows,
                          std::uint64_t seed, std::size_t count) {
  std::size_t mismatches = 0;
  for (std::size_t idx : pick_indices(rows.size(), seed, count)) {
    const auto& row = rows[idx];
    if (!(evaluate_cd_point(cfg, row.c_abs, row.d_abs, row.n) == row)) ++mismatches;
  }
  return mismatches;
}

std::size_t spot_check_werner(const SweepConfig& cfg, const std::vector<WernerRow>& rows,
                              std::uint64_t seed, std::size_t count) {
  const auto dirs = werner_directions(cfg);
  std::size_t mismatches = 0;
  for (std::size_t idx : pick_indices(rows.size(), seed, count)) {
    const auto& row = rows[idx];
    if (!(evaluate_werner_point(row.p, row.n, dirs) == row)) ++mismatches;
  }
  return mismatches;
}

std::string werner_csv_header(std::size_t dir_count) {
  std::string h = "p,n,valid,i_n";
  for (std::size_t k = 0; k < dir_count; ++k) h += ",i_s_dir" + std::to_string(k);
  h += ",class";
  return h;
}

void write_cd_csv(std::ostream& out, const std::vector<CdRow>& rows) {
  out << kCdCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.c_abs) << ',' << format_number(r.d_abs) << ',' << r.n << ','
        << (r.valid ? 1 : 0) << ',' << to_string(r.state_class) << ','
        << format_optional(r.negativity) << ',' << format_optional(r.concurrence) << ','
        << format_optional(r.s12) << ',' << format_optional(r.i_n) << '\n';
  }
}

void write_cd_json(std::ostream& out, const SweepConfig& cfg, const std::vector<CdRow>& rows) {
  json doc;
  doc["config"] = {{"a", cfg.a},
                   {"b", cfg.b},
                   {"n", cfg.n_list},
                   {"c_abs_max", cfg.c_abs_max},
                   {"d_abs_max", cfg.d_abs_max},
                   {"steps", cfg.steps},
                   {"c_phase", cfg.c_phase},
                   {"d_phase", cfg.d_phase}};
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"c_abs", r.c_abs},
                   {"d_abs", r.d_abs},
                   {"n", r.n},
                   {"valid", r.valid},
                   {"class", std::string(to_string(r.state_class))},
                   {"negativity", optional_json(r.negativity)},
                   {"concurrence", optional_json(r.concurrence)},
                   {"s12", optional_json(r.s12)},
                   {"i_n", optional_json(r.i_n)}});
  }
  doc["rows"] = std::move(arr);
  out << doc.dump(1) << '\n';
}

void write_werner_csv(std::ostream& out, const SweepConfig& cfg,
                      std::span<const DirectionPair> dirs, const std::vector<WernerRow>& rows) {
  out << "# seed=" << cfg.seed << " grid_dirs=" << cfg.grid_dirs
      << " random_dirs=" << cfg.random_dirs << '\n';
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    out << "# dir" << k << " theta_a=" << format_number(dirs[k].a.theta)
        << " psi_a=" << format_number(dirs[k].a.psi)
        << " theta_b=" << format_number(dirs[k].b.theta)
        << " psi_b=" << format_number(dirs[k].b.psi) << '\n';
  }
  for (int n : cfg.n_list) {
    const auto t = werner_entanglement_threshold(n);
    out << "# threshold n=" << n << " p_star=" << format_number(t.upper);
    if (t.lower) out << " p_lower=" << format_number(*t.lower);
    out << '\n';
  }
  out << werner_csv_header(dirs.size()) << '\n';
  for (const auto& r : rows) {
    out << format_number(r.p) << ',' << r.n << ',' << (r.valid ? 1 : 0) << ','
        << format_optional(r.i_n);
    for (const auto& v : r.i_s) out << ',' << format_optional(v);
    out << ',' << to_string(r.state_class) << '\n';
  }
}

void write_werner_json(std::ostream& out, const SweepConfig& cfg,
                       std::span<const DirectionPair> dirs, const std::vector<WernerRow>& rows) {
  json doc;
  doc["config"] = {{"n", cfg.n_list},
                   {"p_min", cfg.p_min},
                   {"p_max", cfg.p_max},
                   {"p_steps", cfg.p_steps},
                   {"seed", cfg.seed},
                   {"grid_dirs", cfg.grid_dirs},
                   {"random_dirs", cfg.random_dirs}};
  doc["directions"] = directions_json(dirs);
  doc["thresholds"] = thresholds_json(cfg.n_list);
  json arr = json::array();
  for (const auto& r : rows) {
    json i_s = json::array();
    for (const auto& v : r.i_s) i_s.push_back(optional_json(v));
    arr.push_back({{"p", r.p},
                   {"n", r.n},
                   {"valid", r.valid},
                   {"i_n", optional_json(r.i_n)},
                   {"i_s", std::move(i_s)},
                   {"class", std::string(to_string(r.state_class))}});
  }
  doc["rows"] = std::move(arr);
  out << doc.dump(1) << '\n';
}

}  // namespace xstate::cli
