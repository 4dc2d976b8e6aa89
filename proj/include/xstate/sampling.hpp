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

// Seeded direction-pair samples for entropic-inequality sweeps: a Halton
// grid over (theta_a, theta_b, psi_a, psi_b) followed by mt19937_64 draws.
// Both parts are bit-reproducible from the seed.

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "xstate/tomography.hpp"

namespace xstate {

namespace detail {

inline double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double f = inv;
  double r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % base);
    index /= base;
    f *= inv;
  }
  return r;
}

// 53 high bits of a 64-bit draw, in [0, 1).
inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

inline std::vector<DirectionPair> sample_direction_pairs(std::size_t grid_count,
                                                         std::size_t random_count,
                                                         std::uint64_t seed) {
  constexpr double kPi = std::numbers::pi;
  std::vector<DirectionPair> out;
  out.reserve(grid_count + random_count);
  for (std::size_t i = 1; i <= grid_count; ++i) {
    out.push_back({{kPi * detail::radical_inverse(i, 2), 0.0,
                    2.0 * kPi * detail::radical_inverse(i, 5)},
                   {kPi * detail::radical_inverse(i, 3), 0.0,
                    2.0 * kPi * detail::radical_inverse(i, 7)}});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    const double ta = kPi * detail::unit_double(rng());
    const double tb = kPi * detail::unit_double(rng());
    const double pa = 2.0 * kPi * detail::unit_double(rng());
    const double pb = 2.0 * kPi * detail::unit_double(rng());
    out.push_back({{ta, 0.0, pa}, {tb, 0.0, pb}});
  }
  return out;
}

}  // namespace xstate
