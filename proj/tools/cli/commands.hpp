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

#include <iosfwd>

#include "cli/config.hpp"
#include "xstate/core.hpp"
#include "xstate/tomography.hpp"

namespace xstate::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidState = 2,
  kExitSelfCheck = 3,
};

struct StateArgs {
  double a = 0.0;
  double b = 0.0;
  double c_abs = 0.0;
  double c_phase = 0.0;
  double d_abs = 0.0;
  double d_phase = 0.0;
  int n = 1;

  XParams params() const { return XParams::from_polar(a, b, c_abs, c_phase, d_abs, d_phase); }
};

int cmd_analyze(const StateArgs& args, bool json, std::ostream& out, std::ostream& err);

int cmd_tomogram(const StateArgs& args, const Direction& dir_a, const Direction& dir_b,
                 bool json, std::ostream& out, std::ostream& err);

/// Writes to cfg.output when set, otherwise to `out`. The file is opened
/// only after every row has been computed and spot-checked.
int cmd_sweep_cd(const SweepConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep_werner(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace xstate::cli
