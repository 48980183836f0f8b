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

// Reference values of w(z) by direct numerical integration. Slow; meant for
// validating the series kernels, never for production evaluation.

#include "cef/coefficients.hpp"
#include "cef/series.hpp"

namespace cef {

struct QuadratureSpec {
  double tau_max = 50.0;      // upper truncation of the integration variable
  double abs_tol = 1e-14;     // target for the summed Gauss-Kronrod error estimate
  int max_subdivisions = 1 << 16;

  /// Throws ParameterError unless tau_max > 0, abs_tol > 0, max_subdivisions >= 1.
  void validate() const;
};

/// (1/sqrt(pi)) int_0^{tau_max} exp(-t^2/4) exp(-y t) exp(i x t) dt, Im z > 0.
///
/// Adaptive 7/15-point Gauss-Kronrod on an initial partition with panel width
/// at most pi / (4 max(1, |x|)), so every panel spans less than an eighth of
/// an oscillation. Throws ConvergenceError when max_subdivisions bisections do
/// not bring the error estimate under abs_tol.
[[nodiscard]] Complex w_quadrature(Complex z, const QuadratureSpec& spec = {});

/// Integral over [0, tau_m] of the Fourier-expanded kernel
///   (1/sqrt(pi)) [a_0/2 + sum_{n=1}^{N} a_n cos(n pi t / tau_m)] exp(-y t) exp(i x t).
/// Its closed form is w_refined, so the two must agree to quadrature accuracy.
/// spec.tau_max is ignored; the interval is fixed by the table.
[[nodiscard]] Complex w_finite_quadrature(Complex z, const CoefficientTable& coeffs,
                                          const QuadratureSpec& spec = {});

}  // namespace cef
