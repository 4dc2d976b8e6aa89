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

// Spin tomograms of X-states: the joint distribution of spin projections
// of the two qubits measured along directions given by Euler angles.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "xstate/core.hpp"
#include "xstate/error.hpp"

namespace xstate {

/// Euler angles of a quantization axis. theta must lie in [0, pi]; it is
/// rejected rather than wrapped so distinct directions never alias.
struct Direction {
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;

  friend bool operator==(const Direction&, const Direction&) = default;
};

struct DirectionPair {
  Direction a;
  Direction b;
};

inline void check_direction(const Direction& dir) {
  if (!std::isfinite(dir.theta) || !std::isfinite(dir.phi) || !std::isfinite(dir.psi)) {
    throw Error(ErrorKind::kInvalidAngle, "Euler angles must be finite");
  }
  if (dir.theta < 0.0 || dir.theta > std::numbers::pi) {
    throw Error(ErrorKind::kInvalidAngle,
                "theta = " + std::to_string(dir.theta) + " outside [0, pi]");
  }
}

/// SU(2) rotation for the direction. Row 0 projects on spin up (m = +1/2).
inline Matrix2 su2_matrix(const Direction& dir) {
  check_direction(dir);
  const double ch = std::cos(dir.theta / 2.0);
  const double sh = std::sin(dir.theta / 2.0);
  const double sum = 0.5 * (dir.phi + dir.psi);
  const double diff = 0.5 * (dir.phi - dir.psi);
  return {{{ch * std::polar(1.0, sum), sh * std::polar(1.0, diff)},
           {-sh * std::polar(1.0, -diff), ch * std::polar(1.0, -sum)}}};
}

struct TomogramTable {
  // First label is qubit 1 along dir_a, second is qubit 2 along dir_b.
  double w_uu = 0.0;
  double w_ud = 0.0;
  double w_du = 0.0;
  double w_dd = 0.0;
  Direction dir_a;
  Direction dir_b;

  std::array<double, 4> probabilities() const { return {w_uu, w_ud, w_du, w_dd}; }
  double sum() const { return w_uu + w_ud + w_du + w_dd; }
};

/// Closed-form tomogram of an X-state:
///
///   W(up,up) = W(dn,dn) = a f+ + b f- + g
///   W(up,dn) = W(dn,up) = a f- + b f+ - g
///
/// with f+ = cos^2 cos^2 + sin^2 sin^2, f- = cos^2 sin^2 + sin^2 cos^2 of the
/// half polar angles and the interference term
///   g = 1/2 sin(theta_a) sin(theta_b) Re(c e^{i(psi_a - psi_b)} + d e^{i(psi_a + psi_b)}).
/// phi drops out: it only contributes a phase to each row of the rotation.
inline TomogramTable tomogram(const XParams& p, const Direction& dir_a, const Direction& dir_b) {
  require_valid(p, "tomogram");
  check_direction(dir_a);
  check_direction(dir_b);
  const double ca = std::cos(dir_a.theta / 2.0);
  const double sa = std::sin(dir_a.theta / 2.0);
  const double cb = std::cos(dir_b.theta / 2.0);
  const double sb = std::sin(dir_b.theta / 2.0);
  const double f_plus = ca * ca * cb * cb + sa * sa * sb * sb;
  const double f_minus = ca * ca * sb * sb + sa * sa * cb * cb;
  const Complex z = p.c * std::polar(1.0, dir_a.psi - dir_b.psi) +
                    p.d * std::polar(1.0, dir_a.psi + dir_b.psi);
  const double g = 0.5 * std::sin(dir_a.theta) * std::sin(dir_b.theta) * z.real();

  TomogramTable t;
  t.w_uu = p.a * f_plus + p.b * f_minus + g;
  t.w_dd = t.w_uu;
  t.w_ud = p.a * f_minus + p.b * f_plus - g;
  t.w_du = t.w_ud;
  t.dir_a = dir_a;
  t.dir_b = dir_b;
  return t;
}

struct Marginals {
  // Index 0 is spin up.
  std::array<double, 2> first{};
  std::array<double, 2> second{};
};

inline Marginals marginals(const TomogramTable& t) {
  return {{t.w_uu + t.w_ud, t.w_du + t.w_dd}, {t.w_uu + t.w_du, t.w_ud + t.w_dd}};
}

/// Tomogram of the power-channel image of werner(p), written directly in p:
///   A(p) = 1/2 ((1-p)^n + (1+3p)^n) / (3(1-p)^n + (1+3p)^n)
///   B(p) = (1-p)^n / (3(1-p)^n + (1+3p)^n)
///   C(p) = A(p) - B(p)
/// and the interference term C(p)/2 sin(theta_1) sin(theta_2) cos(psi_1 + psi_2).
inline TomogramTable werner_tomogram(double p, int n, const Direction& dir_1,
                                     const Direction& dir_2) {
  if (n < 1) throw std::invalid_argument("channel power must be >= 1");
  check_direction(dir_1);
  check_direction(dir_2);
  const double x = std::pow(1.0 + 3.0 * p, n);
  const double y = std::pow(1.0 - p, n);
  const double z = x + 3.0 * y;
  if (z == 0.0 || x / z < -kPsdTolerance || y / z < -kPsdTolerance) {
    throw Error(ErrorKind::kInvalidState, "Werner channel image is not a density matrix");
  }
  const double big_a = 0.5 * (y + x) / z;
  const double big_b = y / z;
  const double big_c = big_a - big_b;

  const double c1 = std::cos(dir_1.theta / 2.0);
  const double s1 = std::sin(dir_1.theta / 2.0);
  const double c2 = std::cos(dir_2.theta / 2.0);
  const double s2 = std::sin(dir_2.theta / 2.0);
  const double same = c1 * c1 * c2 * c2 + s1 * s1 * s2 * s2;
  const double cross = s1 * s1 * c2 * c2 + c1 * c1 * s2 * s2;
  const double g = 0.5 * big_c * std::sin(dir_1.theta) * std::sin(dir_2.theta) *
                   std::cos(dir_1.psi + dir_2.psi);

  TomogramTable t;
  t.w_uu = big_a * same + big_b * cross + g;
  t.w_dd = t.w_uu;
  t.w_ud = big_a * cross + big_b * same - g;
  t.w_du = t.w_ud;
  t.dir_a = dir_1;
  t.dir_b = dir_2;
  return t;
}

}  // namespace xstate
