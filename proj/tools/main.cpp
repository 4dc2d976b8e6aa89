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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace {

using xstate::cli::SweepConfig;
using xstate::cli::SweepKind;

void add_state_options(CLI::App* cmd, xstate::cli::StateArgs& s) {
  cmd->add_option("--a", s.a, "outer diagonal weight")->required();
  cmd->add_option("--b", s.b, "inner diagonal weight")->required();
  cmd->add_option("--c-abs", s.c_abs, "|c|")->required();
  cmd->add_option("--c-phase", s.c_phase, "arg c in radians");
  cmd->add_option("--d-abs", s.d_abs, "|d|")->required();
  cmd->add_option("--d-phase", s.d_phase, "arg d in radians");
  cmd->add_option("--n", s.n, "channel power");
}

// Sweep flags are kept as text and applied through the same path as config
// file keys, after the file, so flags win.
void add_sweep_options(CLI::App* cmd, std::map<std::string, std::string>& flags,
                       SweepKind kind) {
  std::vector<std::pair<std::string, std::string>> names = {
      {"a", "outer diagonal weight"},
      {"b", "inner diagonal weight"},
      {"n", "comma-separated channel powers"},
      {"c-phase", "arg c in radians"},
      {"d-phase", "arg d in radians"},
      {"format", "csv or json"},
  };
  if (kind == SweepKind::kCd) {
    names.insert(names.end(), {{"c-abs-max", "upper end of the |c| axis"},
                               {"d-abs-max", "upper end of the |d| axis"},
                               {"steps", "grid points per axis"}});
  } else {
    names.insert(names.end(), {{"p-min", "lower end of p"},
                               {"p-max", "upper end of p"},
                               {"p-steps", "points on the p axis"},
                               {"seed", "direction sampling seed"},
                               {"grid-dirs", "low-discrepancy direction pairs"},
                               {"random-dirs", "seeded random direction pairs"}});
  }
  for (const auto& [name, help] : names) {
    cmd->add_option_function<std::string>(
        "--" + name, [&flags, key = name](const std::string& v) { flags[key] = v; }, help);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"X-state power channel analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::string output;
  std::string config_path;
  app.add_flag("--json", json, "structured JSON output");
  app.add_option("--output", output, "write to this file instead of standard output");
  app.add_option("--config", config_path, "key = value sweep configuration file");

  xstate::cli::StateArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "report on a single X-state");
  add_state_options(analyze, analyze_args);

  xstate::cli::StateArgs tomo_args;
  xstate::Direction dir_a;
  xstate::Direction dir_b;
  auto* tomogram = app.add_subcommand("tomogram", "spin tomogram for two directions");
  add_state_options(tomogram, tomo_args);
  tomogram->add_option("--theta-a", dir_a.theta)->required();
  tomogram->add_option("--psi-a", dir_a.psi)->required();
  tomogram->add_option("--theta-b", dir_b.theta)->required();
  tomogram->add_option("--psi-b", dir_b.psi)->required();
  tomogram->add_option("--phi-a", dir_a.phi, "recorded, does not affect the tomogram");
  tomogram->add_option("--phi-b", dir_b.phi, "recorded, does not affect the tomogram");

  std::map<std::string, std::string> cd_flags;
  auto* sweep_cd = app.add_subcommand("sweep-cd", "grid over (|c|, |d|) at fixed a, b");
  add_sweep_options(sweep_cd, cd_flags, SweepKind::kCd);

  std::map<std::string, std::string> werner_flags;
  auto* sweep_werner = app.add_subcommand("sweep-werner", "Werner line information curves");
  add_sweep_options(sweep_werner, werner_flags, SweepKind::kWerner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return xstate::cli::kExitUsage;
  }

  if (analyze->parsed() || tomogram->parsed()) {
    std::ofstream file;
    if (!output.empty()) {
      file.open(output, std::ios::binary | std::ios::trunc);
      if (!file) {
        std::cerr << "error: cannot open output file '" << output << "'\n";
        return xstate::cli::kExitUsage;
      }
    }
    std::ostream& out = output.empty() ? std::cout : file;
    if (analyze->parsed()) return xstate::cli::cmd_analyze(analyze_args, json, out, std::cerr);
    return xstate::cli::cmd_tomogram(tomo_args, dir_a, dir_b, json, out, std::cerr);
  }

  const SweepKind kind = sweep_cd->parsed() ? SweepKind::kCd : SweepKind::kWerner;
  SweepConfig cfg = SweepConfig::defaults(kind);
  try {
    if (!config_path.empty()) xstate::cli::load_config_file(cfg, config_path);
    for (const auto& [k, v] : kind == SweepKind::kCd ? cd_flags : werner_flags) {
      xstate::cli::apply_setting(cfg, k, v);
    }
    if (!output.empty()) cfg.output = output;
    if (json) cfg.format = xstate::cli::OutputFormat::kJson;
  } catch (const xstate::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return xstate::cli::kExitUsage;
  }
  return kind == SweepKind::kCd ? xstate::cli::cmd_sweep_cd(cfg, std::cout, std::cerr)
                                : xstate::cli::cmd_sweep_werner(cfg, std::cout, std::cerr);
}
