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

#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "cli/format.hpp"
#include "cli/sweep.hpp"
#include "xstate/entanglement.hpp"
#include "xstate/information.hpp"

namespace xstate::cli {
namespace {

using nlohmann::json;

// Self-check subsample seed; fixed so reruns check the same rows.
constexpr std::uint64_t kSpotCheckSeed = 0x5eed;

json params_json(const XParams& p) {
  return {{"a", p.a},
          {"b", p.b},
          {"c_abs", std::abs(p.c)},
          {"c_phase", std::arg(p.c)},
          {"d_abs", std::abs(p.d)},
          {"d_phase", std::arg(p.d)}};
}

json lambda_json(const std::array<double, 4>& l) { return json(std::vector<double>(l.begin(), l.end())); }

json measures_json(const XParams& p) {
  json j;
  j["class"] = std::string(to_string(classify(p)));
  j["ppt_spectrum"] = lambda_json(ppt_spectrum(p));
  if (is_valid(p)) {
    const auto ent = entanglement_report(p);
    const auto info = system_entropies(p);
    j["negativity"] = *ent.negativity;
    j["concurrence"] = *ent.concurrence;
    j["s12"] = info.s12;
    j["s1"] = info.s1;
    j["s2"] = info.s2;
    j["i_n"] = info.i_n;
  }
  return j;
}

void print_params(std::ostream& out, const std::string& prefix, const XParams& p) {
  out << prefix << "a: " << format_number(p.a) << '\n'
      << prefix << "b: " << format_number(p.b) << '\n'
      << prefix << "c_abs: " << format_number(std::abs(p.c)) << '\n'
      << prefix << "c_phase: " << format_number(std::arg(p.c)) << '\n'
      << prefix << "d_abs: " << format_number(std::abs(p.d)) << '\n'
      << prefix << "d_phase: " << format_number(std::arg(p.d)) << '\n';
}

void print_lambda(std::ostream& out, const std::string& key, const std::array<double, 4>& l) {
  out << key << ':';
  for (double v : l) out << ' ' << format_number(v);
  out << '\n';
}

void print_measures(std::ostream& out, const std::string& prefix, const XParams& p) {
  out << prefix << "class: " << to_string(classify(p)) << '\n';
  print_lambda(out, prefix + "ppt_spectrum", ppt_spectrum(p));
  if (!is_valid(p)) return;
  const auto ent = entanglement_report(p);
  const auto info = system_entropies(p);
  out << prefix << "negativity: " << format_number(*ent.negativity) << '\n'
      << prefix << "concurrence: " << format_number(*ent.concurrence) << '\n'
      << prefix << "s12: " << format_number(info.s12) << '\n'
      << prefix << "s1: " << format_number(info.s1) << '\n'
      << prefix << "s2: " << format_number(info.s2) << '\n'
      << prefix << "i_n: " << format_number(info.i_n) << '\n';
}

int write_output(const std::string& path, std::ostream& fallback, std::ostream& err,
                 const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(fallback);
    return kExitOk;
  }
  std::ostringstream buf;
  emit(buf);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file '" << path << "'\n";
    return kExitUsage;
  }
  file << buf.str();
  if (!file.flush()) {
    err << "error: failed writing '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int cmd_analyze(const StateArgs& args, bool as_json, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "error: --n must be >= 1\n";
    return kExitUsage;
  }
  const XParams input = args.params();
  const Validity validity = validate(input);
  std::optional<ChannelResult> image;
  std::string channel_error;
  try {
    image = apply_power_channel(input, args.n);
  } catch (const Error& e) {
    channel_error = e.what();
  }

  if (as_json) {
    json j;
    j["input"] = params_json(input);
    j["validity"] = std::string(to_string(validity));
    j["spectrum"] = lambda_json(spectrum(input).lambda);
    j["input_measures"] = measures_json(input);
    j["n"] = args.n;
    if (image) {
      j["image"] = params_json(image->params);
      j["image_valid"] = image->valid;
      j["image_spectrum"] = lambda_json(spectrum(image->params).lambda);
      j["image_measures"] = measures_json(image->params);
    } else {
      j["image_error"] = channel_error;
    }
    out << j.dump(2) << '\n';
  } else {
    print_params(out, "", input);
    out << "validity: " << to_string(validity) << '\n';
    print_lambda(out, "spectrum", spectrum(input).lambda);
    print_measures(out, "", input);
    out << "n: " << args.n << '\n';
    if (image) {
      print_params(out, "image_", image->params);
      out << "image_valid: " << (image->valid ? 1 : 0) << '\n';
      print_lambda(out, "image_spectrum", spectrum(image->params).lambda);
      print_measures(out, "image_", image->params);
    } else {
      out << "image_error: " << channel_error << '\n';
    }
  }
  return validity == Validity::kValid ? kExitOk : kExitInvalidState;
}

int cmd_tomogram(const StateArgs& args, const Direction& dir_a, const Direction& dir_b,
                 bool as_json, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "error: --n must be >= 1\n";
    return kExitUsage;
  }
  try {
    check_direction(dir_a);
    check_direction(dir_b);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const XParams input = args.params();
  if (!is_valid(input)) {
    err << "error: input state is " << to_string(validate(input)) << '\n';
    return kExitInvalidState;
  }
  XParams state = input;
  try {
    const auto image = apply_power_channel(input, args.n);
    if (!image.valid || !is_valid(image.params)) {
      err << "error: channel image for n = " << args.n << " is not a density matrix\n";
      return kExitInvalidState;
    }
    state = image.params;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidState;
  }

  const ShannonReport r = shannon_report(state, dir_a, dir_b);
  const Marginals m = marginals(r.table);
  if (as_json) {
    json j;
    j["n"] = args.n;
    j["state"] = params_json(state);
    j["dir_a"] = {{"theta", dir_a.theta}, {"phi", dir_a.phi}, {"psi", dir_a.psi}};
    j["dir_b"] = {{"theta", dir_b.theta}, {"phi", dir_b.phi}, {"psi", dir_b.psi}};
    j["w_uu"] = r.table.w_uu;
    j["w_ud"] = r.table.w_ud;
    j["w_du"] = r.table.w_du;
    j["w_dd"] = r.table.w_dd;
    j["sum"] = r.table.sum();
    j["marginal_1"] = {m.first[0], m.first[1]};
    j["marginal_2"] = {m.second[0], m.second[1]};
    j["h12"] = r.h12;
    j["h1"] = r.h1;
    j["h2"] = r.h2;
    j["i_s"] = r.i_s;
    out << j.dump(2) << '\n';
  } else {
    out << "n: " << args.n << '\n'
        << "theta_a: " << format_number(dir_a.theta) << '\n'
        << "phi_a: " << format_number(dir_a.phi) << '\n'
        << "psi_a: " << format_number(dir_a.psi) << '\n'
        << "theta_b: " << format_number(dir_b.theta) << '\n'
        << "phi_b: " << format_number(dir_b.phi) << '\n'
        << "psi_b: " << format_number(dir_b.psi) << '\n'
        << "w_uu: " << format_number(r.table.w_uu) << '\n'
        << "w_ud: " << format_number(r.table.w_ud) << '\n'
        << "w_du: " << format_number(r.table.w_du) << '\n'
        << "w_dd: " << format_number(r.table.w_dd) << '\n'
        << "sum: " << format_number(r.table.sum()) << '\n'
        << "marginal_1: " << format_number(m.first[0]) << ' ' << format_number(m.first[1]) << '\n'
        << "marginal_2: " << format_number(m.second[0]) << ' ' << format_number(m.second[1])
        << '\n'
        << "h12: " << format_number(r.h12) << '\n'
        << "h1: " << format_number(r.h1) << '\n'
        << "h2: " << format_number(r.h2) << '\n'
        << "i_s: " << format_number(r.i_s) << '\n';
  }
  return kExitOk;
}

int cmd_sweep_cd(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CdRow> rows;
  try {
    rows = run_sweep_cd(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (const auto bad = spot_check_cd(cfg, rows, kSpotCheckSeed); bad != 0) {
    err << "error: " << bad << " sweep rows disagree with single-point evaluation\n";
    return kExitSelfCheck;
  }
  return write_output(cfg.output, out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::kJson) {
      write_cd_json(os, cfg, rows);
    } else {
      write_cd_csv(os, rows);
    }
  });
}

int cmd_sweep_werner(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<WernerRow> rows;
  try {
    rows = run_sweep_werner(cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (const auto bad = spot_check_werner(cfg, rows, kSpotCheckSeed); bad != 0) {
    err << "error: " << bad << " sweep rows disagree with single-point evaluation\n";
    return kExitSelfCheck;
  }
  const auto dirs = werner_directions(cfg);
  return write_output(cfg.output, out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::kJson) {
      write_werner_json(os, cfg, dirs, rows);
    } else {
      write_werner_csv(os, cfg, dirs, rows);
    }
  });
}

}  // namespace xstate::cli
