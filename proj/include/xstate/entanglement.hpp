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

// Negativity and concurrence of X-states.
//
// Negativity here is Tr|rho^T2| (1 for separable states, 2 for a Bell
// state), not the (||.||_1 - 1)/2 normalization.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>

#include "xstate/core.hpp"

namespace xstate {

inline double negativity(const XParams& p) {
  require_valid(p, "negativity");
  double s = 0.0;
  for (double l : ppt_spectrum(p)) s += std::abs(l);
  return s;
}

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y) read back as X parameters.
/// sigma_y x sigma_y maps |k> to s_k |3-k> with s = (-1, 1, 1, -1), so the
/// flipped element (i, j) is s_i s_j conj(rho(3-i, 3-j)).
inline XParams spin_flip(const XParams& p) {
  constexpr std::array<double, 4> sign{-1.0, 1.0, 1.0, -1.0};
  const auto flipped = [&](int i, int j) {
    return sign[i] * sign[j] * std::conj(element(p, 3 - i, 3 - j));
  };
  return {flipped(0, 0).real(), flipped(1, 1).real(), flipped(1, 2), flipped(0, 3)};
}

/// Eigenvalues of R = rho * spin_flip(rho). spin_flip is the identity on
/// X-states, so R = rho^2 with eigenvalues (a +- |d|)^2, (b +- |c|)^2.
inline std::array<double, 4> concurrence_r_spectrum(const XParams& p) {
  auto lambda = spectrum(p).lambda;
  for (double& l : lambda) l *= l;
  return lambda;
}

inline double concurrence(const XParams& p) {
  require_valid(p, "concurrence");
  auto roots = concurrence_r_spectrum(p);
  for (double& r : roots) r = std::sqrt(std::max(r, 0.0));
  // The largest root is not necessarily a + |d|.
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

struct EntanglementReport {
  StateClass state_class = StateClass::kSeparable;
  std::array<double, 4> ppt_spectrum{};
  // Empty for invalid states.
  std::optional<double> negativity;
  std::optional<double> concurrence;
};

inline EntanglementReport entanglement_report(const XParams& p) {
  EntanglementReport r;
  r.state_class = classify(p);
  r.ppt_spectrum = ppt_spectrum(p);
  if (r.state_class == StateClass::kSeparable || r.state_class == StateClass::kEntangled) {
    r.negativity = negativity(p);
    r.concurrence = concurrence(p);
  }
  return r;
}

}  // namespace xstate
