// Copyright 2026 The cefseries Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cef/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cef {

std::string format_scientific(double value) {
  if (!std::isfinite(value)) {
    return std::isnan(value) ? "NaN" : (value > 0 ? "Inf" : "-Inf");
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15E", value);
  std::string text(buffer);
  const auto e = text.find('E');
  const int exponent = std::atoi(text.c_str() + e + 1);
  text.resize(e + 1);
  text += std::to_string(exponent);
  return text;
}

}  // namespace cef
