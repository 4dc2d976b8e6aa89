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

// Von Neumann and tomographic Shannon entropies (nats), mutual information
// and the inequalities relating them.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "xstate/core.hpp"
#include "xstate/error.hpp"
#include "xstate/tomography.hpp"

namespace xstate {

inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kLn4 = 2.0 * std::numbers::ln2;
inline constexpr double kInequalityTolerance = 1e-10;

namespace detail {

// -sum x ln x over a probability vector. Entries in [-kPsdTolerance, 0] are
// treated as zero; anything more negative is a genuine error.
inline double entropy_nats(std::span<const double> xs, const char* what) {
  double total = 0.0;
  for (double x : xs) {
    if (!(x >= -kPsdTolerance)) {
      throw Error(ErrorKind::kInvalidSpectrum,
                  std::string(what) + " has entry " + std::to_string(x) + " below zero");
    }
    total += x;
  }
  if (!(std::abs(total - 1.0) <= kTraceTolerance)) {
    throw Error(ErrorKind::kInvalidSpectrum,
                std::string(what) + " sums to " + std::to_string(total));
  }
  double h = 0.0;
  for (double x : xs) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

inline std::array<double, 2> qubit_eigenvalues(const Matrix2& m) {
  const double mean = 0.5 * (m[0][0].real() + m[1][1].real());
  const double half_gap = 0.5 * (m[0][0].real() - m[1][1].real());
  const double r = std::sqrt(half_gap * half_gap + std::norm(m[0][1]));
  return {mean + r, mean - r};
}

}  // namespace detail

inline double von_neumann_entropy(std::span<const double> eigenvalues) {
  return detail::entropy_nats(eigenvalues, "spectrum");
}

inline double shannon_entropy(std::span<const double> probabilities) {
  return detail::entropy_nats(probabilities, "distribution");
}

struct InfoReport {
  double s12 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double i_n = 0.0;
};

/// S(1,2) from the closed-form spectrum, S(1) and S(2) from the reduced
/// qubit states (maximally mixed for every X-state), I_N = S(1)+S(2)-S(1,2).
inline InfoReport system_entropies(const XParams& p) {
  require_valid(p, "system_entropies");
  InfoReport r;
  const auto lambda = spectrum(p).lambda;
  r.s12 = von_neumann_entropy(lambda);
  const auto e1 = detail::qubit_eigenvalues(reduced(p, 1));
  const auto e2 = detail::qubit_eigenvalues(reduced(p, 2));
  r.s1 = von_neumann_entropy(e1);
  r.s2 = von_neumann_entropy(e2);
  r.i_n = r.s1 + r.s2 - r.s12;
  return r;
}

/// Mutual information of the power-channel image of werner(p) in closed
/// form. With x = (1+3p)^n, y = (1-p)^n and Z = x + 3y:
///   I_N = ln 4 - ln Z + (x ln x + 3 y ln y) / Z
inline double werner_mutual_information(double p, int n) {
  if (n < 1) throw std::invalid_argument("channel power must be >= 1");
  const double x = std::pow(1.0 + 3.0 * p, n);
  const double y = std::pow(1.0 - p, n);
  const double z = x + 3.0 * y;
  if (!(z > 0.0) || x < 0.0 || y < 0.0) {
    throw Error(ErrorKind::kInvalidState, "Werner channel image is not a density matrix");
  }
  const auto x_ln_x = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  return kLn4 - std::log(z) + (x_ln_x(x) + 3.0 * x_ln_x(y)) / z;
}

struct ShannonReport {
  double h12 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double i_s = 0.0;
  Direction dir_a;
  Direction dir_b;
  TomogramTable table;
};

inline ShannonReport shannon_report(const XParams& p, const Direction& dir_a,
                                    const Direction& dir_b) {
  ShannonReport r;
  r.table = tomogram(p, dir_a, dir_b);
  r.dir_a = dir_a;
  r.dir_b = dir_b;
  const auto m = marginals(r.table);
  r.h12 = shannon_entropy(r.table.probabilities());
  r.h1 = shannon_entropy(m.first);
  r.h2 = shannon_entropy(m.second);
  r.i_s = r.h1 + r.h2 - r.h12;
  return r;
}

struct InequalityRow {
  DirectionPair dirs;
  double i_s = 0.0;
  double i_n = 0.0;
  bool shannon_below_quantum = false;  // I_S <= I_N
  bool shannon_nonnegative = false;    // I_S >= 0
  bool quantum_nonnegative = false;    // I_N >= 0
  bool subadditive = false;            // S(1) + S(2) >= S(1,2)

  bool all_hold() const {
    return shannon_below_quantum && shannon_nonnegative && quantum_nonnegative && subadditive;
  }
};

struct InequalityReport {
  InfoReport info;
  std::vector<InequalityRow> rows;

  std::size_t violations() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.all_hold(); }));
  }
  bool all_hold() const { return violations() == 0; }
  double max_i_s() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) m = std::max(m, r.i_s);
    return m;
  }
};

/// Evaluates the inequalities for each direction pair. Violations beyond
/// kInequalityTolerance are reported in the rows, never thrown.
inline InequalityReport check_inequalities(const XParams& p,
                                           std::span<const DirectionPair> dirs) {
  InequalityReport out;
  out.info = system_entropies(p);
  out.rows.reserve(dirs.size());
  const double tol = kInequalityTolerance;
  for (const auto& pair : dirs) {
    const ShannonReport sh = shannon_report(p, pair.a, pair.b);
    InequalityRow row;
    row.dirs = pair;
    row.i_s = sh.i_s;
    row.i_n = out.info.i_n;
    row.shannon_below_quantum = sh.i_s <= out.info.i_n + tol;
    row.shannon_nonnegative = sh.i_s >= -tol;
    row.quantum_nonnegative = out.info.i_n >= -tol;
    row.subadditive = out.info.s1 + out.info.s2 >= out.info.s12 - tol;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace xstate
