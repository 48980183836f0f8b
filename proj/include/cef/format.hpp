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

#pragma once

#include <string>

namespace cef {

/// Scientific notation with 15 decimals, uppercase E and an unpadded
/// exponent: 1.167371250446503E-1, 4.196286232960261E0, -1.137037878351197E0.
[[nodiscard]] std::string format_scientific(double value);

}  // namespace cef
