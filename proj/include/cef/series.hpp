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

#include <complex>
#include <string_view>

#include "cef/coefficients.hpp"

namespace cef {

using Complex = std::complex<double>;

/// Which code path produced a value.
enum class EvaluationPath {
  refined,             // closed-form finite-interval series evaluated directly
  common_only,         // Chiarella-Reichel series alone (refining part off)
  full_decomposition,  // common part plus refining part
  symmetry_extended,   // reached through conjugation or reflection
  exact_special_case,  // w(0) = 1
};

[[nodiscard]] std::string_view to_string(EvaluationPath path) noexcept;

struct EvaluationOutcome {
  Complex value;
  EvaluationPath path;
};

// All kernels below require Im z > 0 and finite z; otherwise they throw
// DomainError. Use w_full_plane for arbitrary arguments.

/// Finite-interval series:
///   i (1 - e^{i t z}) / (t z) + i (t^2 z / sqrt(pi)) sum_{n=1}^{N} a_n ((-1)^n e^{i t z} - 1) / (n^2 pi^2 - t^2 z^2)
/// with t = tau_m. Accurate down to y of order 1e-4 at the default parameters.
[[nodiscard]] Complex w_refined(Complex z, const CoefficientTable& coeffs);

/// Chiarella-Reichel series
///   i / (t z) - 2 i t z sum_{n=1}^{N} e^{-n^2 pi^2 / t^2} / (n^2 pi^2 - t^2 z^2).
/// Loses accuracy quickly once Im z drops below ~1.
[[nodiscard]] Complex w_cr(Complex z, const CoefficientTable& coeffs);

/// The same series in step form, i h / (pi z) - i (2 h z / pi) sum e^{-n^2 h^2} / (n^2 h^2 - z^2)
/// with h = pi / tau_m. Evaluated independently of w_cr; kept for cross-checking.
[[nodiscard]] Complex w_cr_step_form(Complex z, const CoefficientTable& coeffs);

/// -i e^{i t z} [1 / (t z) - 2 t z sum_{n=1}^{N} (-1)^n e^{-n^2 pi^2 / t^2} / (n^2 pi^2 - t^2 z^2)].
/// w_cr(z) + refining_part(z) reproduces w_refined(z).
[[nodiscard]] Complex refining_part(Complex z, const CoefficientTable& coeffs);

/// Common part alone when Im z >= y_switch, common plus refining part otherwise.
[[nodiscard]] EvaluationOutcome w_adaptive(Complex z, const CoefficientTable& coeffs);

}  // namespace cef
