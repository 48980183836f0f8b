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

#include "cef/domain.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cef/errors.hpp"
#include "series_detail.hpp"

namespace cef {

namespace {

using detail::complex_over;
using detail::times_i;

/// (e^{i d} - 1) / d for real d, without cancellation.
Complex expm1_i_over(double d) noexcept {
  if (std::abs(d) < 1e-9) {
    return {-0.5 * d, 1.0};
  }
  const double half_sin = std::sin(0.5 * d);
  return {-2.0 * half_sin * half_sin / d, std::sin(d) / d};
}

}  // namespace

bool is_in_native_domain(Complex z) noexcept { return z.imag() > 0.0; }

Complex w_real_axis(double x, const CoefficientTable& coeffs) {
  if (!std::isfinite(x) || x == 0.0) {
    std::ostringstream msg;
    msg << "w_real_axis: requires finite nonzero x, got " << x;
    throw DomainError(msg.str());
  }
  if (x < 0.0) {
    return std::conj(w_real_axis(-x, coeffs));
  }

  const double pi = std::numbers::pi;
  const double tau = coeffs.tau_m();
  const double u = tau * x;
  const Complex e{std::cos(u), std::sin(u)};
  const auto a = coeffs.a();
  const auto pole_sq = coeffs.pole_sq();
  const long nearest = std::lround(u / pi);

  Complex sum{0.0, 0.0};
  double sign = 1.0;
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    sign = -sign;
    if (n == nearest) {
      // (-1)^n e^{iu} - 1 = e^{i d} - 1 and n^2 pi^2 - u^2 = -d (2 n pi + d),
      // with d = u - n pi; the factor d cancels analytically.
      const double d = u - n * pi;
      sum -= a[n] * expm1_i_over(d) / (2.0 * n * pi + d);
    } else {
      sum += complex_over(a[n] * (sign * e - 1.0), Complex(pole_sq[n] - u * u, 0.0));
    }
  }

  // (1 - e^{iu}) / u = -(e^{iu} - 1) / u
  const Complex head = times_i(-expm1_i_over(u));
  const Complex scale = times_i(Complex(coeffs.tau_m_sq() * x / std::sqrt(pi), 0.0));
  return head + scale * sum;
}

EvaluationOutcome w_full_plane(Complex z, const CoefficientTable& coeffs) {
  if (!detail::is_finite(z)) {
    std::ostringstream msg;
    msg << "w_full_plane: argument (" << z.real() << ", " << z.imag() << ") is not finite";
    throw DomainError(msg.str());
  }
  const double x = z.real();
  const double y = z.imag();

  if (x == 0.0 && y == 0.0) {
    return {Complex(1.0, 0.0), EvaluationPath::exact_special_case};
  }
  if (y > 0.0) {
    if (x >= 0.0) {
      return w_adaptive(z, coeffs);
    }
    const auto mirrored = w_adaptive(Complex(-x, y), coeffs);
    return {std::conj(mirrored.value), EvaluationPath::symmetry_extended};
  }
  if (y == 0.0) {
    return {w_real_axis(x, coeffs), EvaluationPath::refined};
  }

  if (y * y - x * x > reflection_exponent_limit) {
    std::ostringstream msg;
    msg << "w_full_plane: reflection term exp(-z^2) overflows for z = (" << x << ", " << y
        << "), y^2 - x^2 = " << y * y - x * x << " > " << reflection_exponent_limit;
    throw OverflowError(msg.str());
  }
  const auto upper = w_full_plane(-z, coeffs);
  return {2.0 * std::exp(-(z * z)) - upper.value, EvaluationPath::symmetry_extended};
}

}  // namespace cef
