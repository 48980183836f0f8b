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

/// Voigt function K(x, y) = Re w(x + iy), y > 0.
[[nodiscard]] double voigt_k(double x, double y, const CoefficientTable& coeffs);

/// L(x, y) = Im w(x + iy), y > 0. Odd in x.
[[nodiscard]] double imag_l(double x, double y, const CoefficientTable& coeffs);

/// erfc(z) = exp(-z^2) w(iz) for complex z, through w_full_plane.
/// Throws OverflowError when exp(-z^2) or the reflection inside w_full_plane
/// leaves double range.
[[nodiscard]] Complex erfc_complex(Complex z, const CoefficientTable& coeffs);

/// Direct series
///   erfc(z) ~ (h z e^{-z^2} / pi) (1/z^2 + 2 sum_{n=1}^{N} e^{-n^2 h^2} / (n^2 h^2 + z^2)),
/// h = pi / tau_m. Only accurate for Re z of order 1 and above; it breaks
/// down toward the imaginary axis the same way w_cr does for small Im z.
/// Throws DomainError at z = 0.
[[nodiscard]] Complex erfc_cr_series(Complex z, const CoefficientTable& coeffs);

}  // namespace cef
