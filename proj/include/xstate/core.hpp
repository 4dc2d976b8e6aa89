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

// Two-qubit X-states and the nonlinear power channel rho -> rho^n / Tr rho^n.
//
// An X-state has non-zero entries only on the diagonal and anti-diagonal of
// its 4x4 density matrix in the computational basis |00>, |01>, |10>, |11>:
//
//     | a  0  0  d |
//     | 0  b  c  0 |
//     | 0  c* b  0 |
//     | d* 0  0  a |
//
// Everything in this header is closed form. The dense oracle used to check
// it lives in numerics.hpp and never calls back into this file.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xstate/error.hpp"

namespace xstate {

using Complex = std::complex<double>;

/// |2(a + b) - 1| above this is a trace violation.
inline constexpr double kTraceTolerance = 1e-9;
/// Eigenvalues in [-kPsdTolerance, 0) count as zero.
inline constexpr double kPsdTolerance = 1e-12;

struct XParams {
  double a = 0.25;
  double b = 0.25;
  Complex c{0.0, 0.0};
  Complex d{0.0, 0.0};

  static XParams from_polar(double a, double b, double c_abs, double c_phase,
                            double d_abs, double d_phase) {
    return {a, b, std::polar(c_abs, c_phase), std::polar(d_abs, d_phase)};
  }

  friend bool operator==(const XParams&, const XParams&) = default;
};

/// Unit phase of z with the convention phase(0) = 1.
inline Complex phase(Complex z) {
  const double r = std::abs(z);
  if (r == 0.0) return {1.0, 0.0};
  return z / r;
}

/// Matrix element (row, col) of the dense X-state, indices in [0, 4).
inline Complex element(const XParams& p, int row, int col) {
  if (row == col) return (row == 0 || row == 3) ? Complex(p.a) : Complex(p.b);
  if (row + col != 3) return {0.0, 0.0};
  switch (row) {
    case 0:
      return p.d;
    case 3:
      return std::conj(p.d);
    case 1:
      return p.c;
    default:
      return std::conj(p.c);
  }
}

struct XSpectrum {
  // (a+|d|, b+|c|, b-|c|, a-|d|)
  std::array<double, 4> lambda{};
  Complex phase_c{1.0, 0.0};
  Complex phase_d{1.0, 0.0};

  double sum() const { return lambda[0] + lambda[1] + lambda[2] + lambda[3]; }
  double min() const { return *std::min_element(lambda.begin(), lambda.end()); }
};

inline XSpectrum spectrum(const XParams& p) {
  const double cm = std::abs(p.c);
  const double dm = std::abs(p.d);
  return {{p.a + dm, p.b + cm, p.b - cm, p.a - dm}, phase(p.c), phase(p.d)};
}

enum class Validity { kValid, kInvalidTrace, kInvalidNotPSD };

enum class StateClass { kSeparable, kEntangled, kInvalidNotPSD, kInvalidTrace };

inline std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::kValid:
      return "valid";
    case Validity::kInvalidTrace:
      return "InvalidTrace";
    case Validity::kInvalidNotPSD:
      return "InvalidNotPSD";
  }
  return "unknown";
}

inline std::string_view to_string(StateClass s) {
  switch (s) {
    case StateClass::kSeparable:
      return "Separable";
    case StateClass::kEntangled:
      return "Entangled";
    case StateClass::kInvalidNotPSD:
      return "InvalidNotPSD";
    case StateClass::kInvalidTrace:
      return "InvalidTrace";
  }
  return "unknown";
}

/// Total: any real a, b and complex c, d are accepted and a status returned.
/// The trace check runs first.
inline Validity validate(const XParams& p) {
  if (!(std::abs(2.0 * (p.a + p.b) - 1.0) <= kTraceTolerance)) {
    return Validity::kInvalidTrace;
  }
  if (p.a - std::abs(p.d) < -kPsdTolerance || p.b - std::abs(p.c) < -kPsdTolerance) {
    return Validity::kInvalidNotPSD;
  }
  return Validity::kValid;
}

inline bool is_valid(const XParams& p) { return validate(p) == Validity::kValid; }

inline void require_valid(const XParams& p, std::string_view op) {
  const Validity v = validate(p);
  if (v != Validity::kValid) {
    throw Error(ErrorKind::kInvalidState,
                std::string(op) + " requires a valid state, got " + std::string(to_string(v)));
  }
}

/// Partial transpose. The X shape is closed under it: c and d trade places.
inline XParams ppt(const XParams& p) { return {p.a, p.b, p.d, p.c}; }

/// (a+|c|, b+|d|, b-|d|, a-|c|)
inline std::array<double, 4> ppt_spectrum(const XParams& p) { return spectrum(ppt(p)).lambda; }

inline StateClass classify(const XParams& p) {
  switch (validate(p)) {
    case Validity::kInvalidTrace:
      return StateClass::kInvalidTrace;
    case Validity::kInvalidNotPSD:
      return StateClass::kInvalidNotPSD;
    case Validity::kValid:
      break;
  }
  const auto ev = ppt_spectrum(p);
  const double lo = *std::min_element(ev.begin(), ev.end());
  return lo >= -kPsdTolerance ? StateClass::kSeparable : StateClass::kEntangled;
}

namespace detail {

inline double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace detail

struct ChannelResult {
  XParams params;
  int n = 1;
  // False when the normalized image has an eigenvalue below -kPsdTolerance.
  // For odd n this happens exactly on non-positive inputs.
  bool valid = true;
};

/// rho -> rho^n / Tr rho^n evaluated on the closed-form spectrum.
///
/// The outer block (a, d) and inner block (b, c) are independent 2x2 blocks
/// with eigenvalues a +- |d| and b +- |c|, so the image is again an X-state:
///
///   A_n = (l1^n + l4^n) / 2Z      D_n = (l1^n - l4^n) / 2Z * phase(d)
///   B_n = (l2^n + l3^n) / 2Z      C_n = (l2^n - l3^n) / 2Z * phase(c)
///
/// with Z = l1^n + l2^n + l3^n + l4^n. Phases of c and d are carried through.
/// Throws Error(kZeroDenominator) if Z vanishes, which needs a non-positive
/// input and odd n.
inline ChannelResult apply_power_channel(const XParams& p, int n) {
  if (n < 1) throw std::invalid_argument("channel power must be >= 1");
  const XSpectrum s = spectrum(p);
  std::array<double, 4> pw{};
  for (std::size_t i = 0; i < 4; ++i) pw[i] = detail::ipow(s.lambda[i], n);
  const double z = pw[0] + pw[1] + pw[2] + pw[3];
  if (z == 0.0 || !std::isfinite(z)) {
    throw Error(ErrorKind::kZeroDenominator, "Tr rho^n vanishes for n = " + std::to_string(n));
  }
  const double two_z = 2.0 * z;
  ChannelResult out;
  out.n = n;
  out.params.a = (pw[0] + pw[3]) / two_z;
  out.params.b = (pw[1] + pw[2]) / two_z;
  out.params.c = ((pw[1] - pw[2]) / two_z) * s.phase_c;
  out.params.d = ((pw[0] - pw[3]) / two_z) * s.phase_d;
  out.valid = std::all_of(pw.begin(), pw.end(),
                          [z](double v) { return v / z >= -kPsdTolerance; });
  return out;
}

/// Werner family a = (1+p)/4, b = (1-p)/4, c = 0, d = p/2. No range check:
/// sweeps evaluate it outside the physical interval [-1/3, 1].
inline XParams werner(double p) {
  return {(1.0 + p) / 4.0, (1.0 - p) / 4.0, Complex(0.0), Complex(p / 2.0)};
}

struct WernerThreshold {
  // The image of werner(p) is entangled for p > upper.
  double upper = 0.0;
  // Even n only: the image is also entangled for p < lower.
  std::optional<double> lower;
};

inline WernerThreshold werner_entanglement_threshold(int n) {
  if (n < 1) throw std::invalid_argument("channel power must be >= 1");
  const double root = std::pow(3.0, 1.0 / n);
  WernerThreshold t;
  t.upper = 1.0 - 4.0 / (root + 3.0);
  if (n % 2 == 0) t.lower = 1.0 + 4.0 / (root - 3.0);
  return t;
}

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

/// Partial trace down to qubit 1 (subsystem = 1) or qubit 2 (subsystem = 2).
/// Basis index of |i k> is 2i + k.
inline Matrix2 reduced(const XParams& p, int subsystem) {
  if (subsystem != 1 && subsystem != 2) {
    throw std::invalid_argument("subsystem must be 1 or 2");
  }
  Matrix2 r{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        r[i][j] += subsystem == 1 ? element(p, 2 * i + k, 2 * j + k)
                                  : element(p, 2 * k + i, 2 * k + j);
      }
    }
  }
  return r;
}

}  // namespace xstate
