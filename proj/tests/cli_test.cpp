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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/format.hpp"
#include "cli/sweep.hpp"
#include "xstate/entanglement.hpp"
#include "xstate/information.hpp"
#include "xstate/sampling.hpp"

namespace xstate::cli {
namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(XSTATE_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing " + key + ">";
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xstate_cli_test_" + name);
}

TEST(Format, FifteenSignificantDigits) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333333");
  EXPECT_EQ(format_number(1.25), "1.25");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_optional(std::nullopt), "");
}

TEST(Config, ParsesKeyValues) {
  std::istringstream in("# comment\n a = 0.3 \n\nn = 2, 4 # trailing\nformat=json\n");
  const auto kv = parse_key_values(in);
  ASSERT_EQ(kv.size(), 3u);
  EXPECT_EQ(kv[0], (std::pair<std::string, std::string>{"a", "0.3"}));
  EXPECT_EQ(kv[1].second, "2, 4");
  SweepConfig cfg;
  for (const auto& [k, v] : kv) apply_setting(cfg, k, v);
  EXPECT_EQ(cfg.a, 0.3);
  EXPECT_EQ(cfg.n_list, (std::vector<int>{2, 4}));
  EXPECT_EQ(cfg.format, OutputFormat::kJson);
}

TEST(Config, Errors) {
  std::istringstream bad("a 0.3\n");
  EXPECT_THROW(parse_key_values(bad), ConfigError);
  SweepConfig cfg;
  EXPECT_THROW(apply_setting(cfg, "unknown", "1"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "a", "abc"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "steps", "2.5"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "n", "0"), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "n", ""), ConfigError);
  EXPECT_THROW(apply_setting(cfg, "format", "xml"), ConfigError);
  apply_setting(cfg, "c-abs-max", "0.25");
  EXPECT_EQ(cfg.c_abs_max, 0.25);
  cfg.steps = 1;
  EXPECT_THROW(validate_config(cfg, SweepKind::kCd), ConfigError);
  cfg = SweepConfig::defaults(SweepKind::kWerner);
  EXPECT_EQ(cfg.n_list.size(), 6u);
  cfg.p_max = std::nan("");
  EXPECT_THROW(validate_config(cfg, SweepKind::kWerner), ConfigError);
}

TEST(Grid, Endpoints) {
  EXPECT_EQ(grid_value(0.0, 0.5, 201, 0), 0.0);
  EXPECT_EQ(grid_value(0.0, 0.5, 201, 200), 0.5);
  EXPECT_DOUBLE_EQ(grid_value(0.0, 0.5, 201, 100), 0.25);
}

TEST(SweepCd, OriginRow) {
  const SweepConfig cfg;
  for (int n : {2, 3, 4, 5}) {
    const auto row = evaluate_cd_point(cfg, 0.0, 0.0, n);
    EXPECT_TRUE(row.valid);
    EXPECT_EQ(row.state_class, StateClass::kSeparable);
    EXPECT_NEAR(*row.negativity, 1.0, 1e-12);
    EXPECT_EQ(*row.concurrence, 0.0);
  }
}

TEST(SweepCd, BoundaryRowMatchesDirectClassify) {
  const SweepConfig cfg;
  const auto row = evaluate_cd_point(cfg, 0.17, 0.33, 2);
  const auto image = apply_power_channel(XParams{0.33, 0.17, 0.17, 0.33}, 2).params;
  EXPECT_EQ(row.state_class, classify(image));
  EXPECT_EQ(*row.negativity, negativity(image));
}

TEST(SweepCd, InvalidRegionOddPower) {
  const SweepConfig cfg;
  const auto row = evaluate_cd_point(cfg, 0.0, 0.4, 3);
  EXPECT_FALSE(row.valid);
  EXPECT_EQ(row.state_class, StateClass::kInvalidNotPSD);
  EXPECT_FALSE(row.negativity.has_value());
  EXPECT_FALSE(row.i_n.has_value());
  EXPECT_TRUE(evaluate_cd_point(cfg, 0.0, 0.4, 2).valid);
}

TEST(SweepCd, RowOrderAndCsv) {
  SweepConfig cfg;
  cfg.steps = 3;
  cfg.n_list = {3, 2};
  const auto rows = run_sweep_cd(cfg);
  ASSERT_EQ(rows.size(), 18u);
  EXPECT_EQ(rows[0].n, 3);
  EXPECT_EQ(rows[1].d_abs, 0.25);
  EXPECT_EQ(rows[3].c_abs, 0.25);
  EXPECT_EQ(rows[9].n, 2);
  EXPECT_EQ(spot_check_cd(cfg, rows, 1, 40), 0u);

  std::ostringstream out;
  write_cd_csv(out, rows);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "c_abs,d_abs,n,valid,class,negativity,concurrence,s12,i_n");
  std::string first;
  std::getline(lines, first);
  EXPECT_EQ(first, "0,0,3,1,Separable,1,0,1.06060834603029,0.3256860150896");
  // |d| = 0.5 > a: invalid for odd n, measures left blank.
  std::string third;
  std::getline(lines, third);
  std::getline(lines, third);
  EXPECT_EQ(third, "0,0.5,3,0,InvalidNotPSD,,,,");
}

TEST(SweepCd, SpotCheckDetectsTampering) {
  SweepConfig cfg;
  cfg.steps = 4;
  auto rows = run_sweep_cd(cfg);
  for (auto& r : rows) {
    if (r.negativity) *r.negativity += 1e-9;
  }
  EXPECT_GT(spot_check_cd(cfg, rows, 3, 32), 0u);
}

TEST(SweepWerner, RowsAndHeader) {
  SweepConfig cfg = SweepConfig::defaults(SweepKind::kWerner);
  cfg.p_steps = 5;
  const auto rows = run_sweep_werner(cfg);
  ASSERT_EQ(rows.size(), 30u);
  for (const auto& r : rows) {
    ASSERT_TRUE(r.valid);
    ASSERT_EQ(r.i_s.size(), 4u);
    if (r.p == 0.0) {
      EXPECT_NEAR(*r.i_n, 0.0, 1e-15);
      for (const auto& v : r.i_s) EXPECT_NEAR(*v, 0.0, 1e-14);
    }
    if (r.p == 1.0) {
      EXPECT_NEAR(*r.i_n, kLn4, 1e-12);
    }
    for (const auto& v : r.i_s) EXPECT_LE(*v, *r.i_n + 1e-10);
  }
  // p = 0.5 sits at index 2 for every n.
  double prev = -1.0;
  for (int k = 0; k < 6; ++k) {
    const auto& r = rows[static_cast<std::size_t>(5 * k + 2)];
    EXPECT_EQ(r.p, 0.5);
    EXPECT_GE(*r.i_n, prev);
    prev = *r.i_n;
  }
  EXPECT_NEAR(*rows[2].i_n, 0.31275151471136753, 1e-12);
  EXPECT_NEAR(*rows[7].i_n, 0.9280861231484374, 1e-12);
  EXPECT_EQ(spot_check_werner(cfg, rows, 5, 32), 0u);

  EXPECT_EQ(werner_csv_header(3), "p,n,valid,i_n,i_s_dir0,i_s_dir1,i_s_dir2,class");
  std::ostringstream out;
  write_werner_csv(out, cfg, werner_directions(cfg), rows);
  const std::string text = out.str();
  EXPECT_NE(text.find("# threshold n=2 p_star=0.154700538379251 p_lower="), std::string::npos);
  EXPECT_NE(text.find("\np,n,valid,i_n,i_s_dir0,i_s_dir1,i_s_dir2,i_s_dir3,class\n"),
            std::string::npos);
  EXPECT_NE(text.find("# seed=2014"), std::string::npos);
}

TEST(SweepWerner, InvalidRowsForOddPowers) {
  const auto dirs = sample_direction_pairs(1, 1, 1);
  const auto row = evaluate_werner_point(-0.5, 3, dirs);
  EXPECT_FALSE(row.valid);
  EXPECT_FALSE(row.i_n.has_value());
  EXPECT_TRUE(evaluate_werner_point(-0.5, 2, dirs).valid);
}

TEST(Commands, AnalyzeMaximallyMixed) {
  std::ostringstream out;
  std::ostringstream err;
  StateArgs s{0.25, 0.25, 0.0, 0.0, 0.0, 0.0, 3};
  EXPECT_EQ(cmd_analyze(s, false, out, err), kExitOk);
  const std::string text = out.str();
  EXPECT_EQ(field(text, "image_class"), "Separable");
  EXPECT_EQ(field(text, "image_negativity"), "1");
  EXPECT_EQ(field(text, "image_concurrence"), "0");
  EXPECT_EQ(field(text, "image_i_n"), "0");
}

TEST(Commands, AnalyzeJson) {
  std::ostringstream out;
  std::ostringstream err;
  StateArgs s{0.5, 0.0, 0.0, 0.0, 0.5, 0.0, 1};
  EXPECT_EQ(cmd_analyze(s, true, out, err), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["image_measures"]["class"], "Entangled");
  EXPECT_NEAR(j["image_measures"]["negativity"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["image_measures"]["concurrence"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["image_measures"]["i_n"].get<double>(), kLn4, 1e-12);
}

TEST(Commands, TomogramSumsToOne) {
  std::ostringstream out;
  std::ostringstream err;
  StateArgs s{0.5, 0.0, 0.0, 0.0, 0.5, 0.0, 1};
  EXPECT_EQ(cmd_tomogram(s, {}, {}, false, out, err), kExitOk);
  EXPECT_EQ(field(out.str(), "w_uu"), "0.5");
  EXPECT_EQ(field(out.str(), "w_ud"), "0");
  EXPECT_EQ(field(out.str(), "sum"), "1");

  std::ostringstream out2;
  EXPECT_EQ(cmd_tomogram(s, {4.0, 0.0, 0.0}, {}, false, out2, err), kExitUsage);
  StateArgs bad{0.33, 0.17, 0.2, 0.0, 0.1, 0.0, 1};
  EXPECT_EQ(cmd_tomogram(bad, {}, {}, false, out2, err), kExitInvalidState);
}

TEST(Binary, AnalyzeExitCodes) {
  const auto ok = run_cli("analyze --a 0.25 --b 0.25 --c-abs 0 --d-abs 0 --n 3");
  EXPECT_EQ(ok.exit_code, 0) << ok.out;
  EXPECT_EQ(field(ok.out, "image_class"), "Separable");

  const auto bell = run_cli("analyze --a 0.5 --b 0 --c-abs 0 --d-abs 0.5");
  EXPECT_EQ(bell.exit_code, 0) << bell.out;
  EXPECT_EQ(field(bell.out, "class"), "Entangled");
  EXPECT_EQ(field(bell.out, "negativity"), "2");
  EXPECT_EQ(field(bell.out, "concurrence"), "1");
  EXPECT_NEAR(std::stod(field(bell.out, "i_n")), kLn4, 1e-14);

  const auto invalid = run_cli("analyze --a 0.33 --b 0.17 --c-abs 0.2 --d-abs 0.1");
  EXPECT_EQ(invalid.exit_code, 2) << invalid.out;
  EXPECT_EQ(field(invalid.out, "validity"), "InvalidNotPSD");

  const auto missing = run_cli("analyze --a 0.3 --c-abs 0 --d-abs 0");
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.out.find("--b"), std::string::npos) << missing.out;

  const auto garbled = run_cli("analyze --a x --b 0.25 --c-abs 0 --d-abs 0");
  EXPECT_EQ(garbled.exit_code, 1);
  EXPECT_NE(garbled.out.find("--a"), std::string::npos) << garbled.out;
}

TEST(Binary, TomogramAndSweeps) {
  const auto t = run_cli(
      "tomogram --a 0.25 --b 0.25 --c-abs 0 --d-abs 0 --theta-a 1 --psi-a 2 --theta-b 0.3 "
      "--psi-b 0.1 --phi-a 5");
  EXPECT_EQ(t.exit_code, 0) << t.out;
  EXPECT_EQ(field(t.out, "w_uu"), "0.25");
  EXPECT_EQ(field(t.out, "phi_a"), "5");

  const auto cfg_path = temp_path("sweep.conf");
  {
    std::ofstream cfg(cfg_path);
    cfg << "# small grid\nsteps = 5\nn = 2,3\nformat = csv\n";
  }
  const auto out_path = temp_path("sweep.csv");
  const auto cd = run_cli("sweep-cd --config " + cfg_path.string() + " --steps 4 --output " +
                          out_path.string());
  EXPECT_EQ(cd.exit_code, 0) << cd.out;
  const std::string csv = read_file(out_path);
  // Header plus 2 * 4 * 4 rows: the flag overrode the file's steps.
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 33);

  const auto bad = run_cli("sweep-cd --steps 1");
  EXPECT_EQ(bad.exit_code, 1);
  const auto bad_key = run_cli("sweep-werner --config " + cfg_path.string() + "x");
  EXPECT_EQ(bad_key.exit_code, 1);

  const auto w = run_cli("sweep-werner --p-steps 3 --n 1,2 --json");
  EXPECT_EQ(w.exit_code, 0) << w.out;
  const auto j = nlohmann::json::parse(w.out);
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_EQ(j["thresholds"][1]["n"], 2);
  std::filesystem::remove(cfg_path);
  std::filesystem::remove(out_path);
}

}  // namespace
}  // namespace xstate::cli
