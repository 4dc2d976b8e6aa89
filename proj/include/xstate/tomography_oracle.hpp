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

// Tomogram by explicit conjugation U rho U^+ with U = u_a (x) u_b. Reference
// for the closed form in tomography.hpp.

#include "xstate/numerics.hpp"
#include "xstate/tomography.hpp"

namespace xstate {

inline TomogramTable tomogram_dense_oracle(const XParams& p, const Direction& dir_a,
                                           const Direction& dir_b) {
  require_valid(p, "tomogram_dense_oracle");
  const auto u = numerics::kron(su2_matrix(dir_a), su2_matrix(dir_b));
  const auto rotated =
      numerics::multiply(numerics::multiply(u, numerics::to_dense(p)), numerics::adjoint(u));
  TomogramTable t;
  t.w_uu = rotated[0][0].real();
  t.w_ud = rotated[1][1].real();
  t.w_du = rotated[2][2].real();
  t.w_dd = rotated[3][3].real();
  t.dir_a = dir_a;
  t.dir_b = dir_b;
  return t;
}

}  // namespace xstate
