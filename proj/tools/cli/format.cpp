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

#include "cli/format.hpp"

#include <array>
#include <charconv>

namespace xstate::cli {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 15);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace xstate::cli
