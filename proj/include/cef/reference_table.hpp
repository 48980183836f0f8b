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

// Published benchmark values of w(z) on the diagonal x = y, kept as the text
// they were printed in and parsed on demand.

#include <string_view>
#include <vector>

namespace cef {

/// How a tabulated Chiarella-Reichel value was judged against the reference.
enum class Quality {
  accurate,      // agrees with the reference to all printed digits
  high,          // relatively high accuracy, a few digits short
  insufficient,  // visibly wrong after a few digits
  inaccurate,    // failed outright
};

[[nodiscard]] std::string_view to_string(Quality q) noexcept;

struct TableRow {
  double x;
  double y;
  // Real part (Voigt function K).
  double re_refined;
  double re_cr;
  Quality re_cr_quality;
  double re_reference;
  // Imaginary part L.
  double im_refined;
  double im_cr;
  Quality im_cr_quality;
  double im_reference;
};

/// The fixture text: one row per line, columns
///   x y K_refined K_cr K_cr_mark K_ref L_refined L_cr L_cr_mark L_ref
/// where marks are "-", "under", "wave" or "struck".
[[nodiscard]] std::string_view reference_table_text() noexcept;

/// Parses reference_table_text(); ten rows from (0.01, 0.01) to (15, 15).
[[nodiscard]] const std::vector<TableRow>& reference_table();

}  // namespace cef
