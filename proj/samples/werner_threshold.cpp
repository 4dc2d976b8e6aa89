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

// Prints how the power channel moves the Werner entanglement threshold and
// what it does to negativity, concurrence and mutual information at p = 0.5.

#include <cstdio>

#include "xstate/core.hpp"
#include "xstate/entanglement.hpp"
#include "xstate/information.hpp"

int main() {
  std::printf("%3s %12s %12s %12s %12s\n", "n", "p*", "N(0.5)", "C(0.5)", "I_N(0.5)");
  for (int n = 1; n <= 6; ++n) {
    const auto image = xstate::apply_power_channel(xstate::werner(0.5), n);
    std::printf("%3d %12.9f %12.9f %12.9f %12.9f\n", n,
                xstate::werner_entanglement_threshold(n).upper,
                xstate::negativity(image.params), xstate::concurrence(image.params),
                xstate::system_entropies(image.params).i_n);
  }
  return 0;
}
