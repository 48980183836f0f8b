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

#include "cef/series.hpp"

namespace cef {

/// True iff the series kernels accept z directly (Im z > 0).
[[nodiscard]] bool is_in_native_domain(Complex z) noexcept;

/// w(z) for any finite z.
///
///  - z = 0 gives exactly 1.
///  - Im z > 0, Re z >= 0 goes to w_adaptive.
///  - Im z > 0, Re z < 0 uses w(-conj z) = conj w(z).
///  - Im z = 0 evaluates the finite-interval series on the real axis.
///  - Im z < 0 uses w(z) = 2 exp(-z^2) - w(-z), and throws OverflowError when
///    y^2 - x^2 > 700.
///
/// Throws DomainError for NaN or infinite input.
[[nodiscard]] EvaluationOutcome w_full_plane(Complex z, const CoefficientTable& coeffs);

/// Finite-interval series at a real argument x != 0. Terms whose pole
/// n pi / tau_m lies next to x are rewritten in a cancellation-free form, so
/// the result stays accurate right on the removable singularities.
[[nodiscard]] Complex w_real_axis(double x, const CoefficientTable& coeffs);

/// Largest y^2 - x^2 for which the reflection term 2 exp(-z^2) is evaluated.
inline constexpr double reflection_exponent_limit = 700.0;

}  // namespace cef
