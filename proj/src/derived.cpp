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

#include "cef/derived.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cef/domain.hpp"
#include "cef/errors.hpp"
#include "series_detail.hpp"

namespace cef {

namespace {

Complex upper_half_value(double x, double y, const CoefficientTable& coeffs, const char* who) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    std::ostringstream msg;
    msg << who << ": requires finite x and y > 0, got (" << x << ", " << y << ")";
    throw DomainError(msg.str());
  }
  return w_full_plane(Complex(x, y), coeffs).value;
}

}  // namespace

double voigt_k(double x, double y, const CoefficientTable& coeffs) {
  return upper_half_value(x, y, coeffs, "voigt_k").real();
}

double imag_l(double x, double y, const CoefficientTable& coeffs) {
  return upper_half_value(x, y, coeffs, "imag_l").imag();
}

Complex erfc_complex(Complex z, const CoefficientTable& coeffs) {
  if (!detail::is_finite(z)) {
    std::ostringstream msg;
    msg << "erfc_complex: argument (" << z.real() << ", " << z.imag() << ") is not finite";
    throw DomainError(msg.str());
  }
  const double x = z.real();
  const double y = z.imag();
  if (y * y - x * x > reflection_exponent_limit) {
    std::ostringstream msg;
    msg << "erfc_complex: exp(-z^2) overflows for z = (" << x << ", " << y << ")";
    throw OverflowError(msg.str());
  }
  const Complex w = w_full_plane(detail::times_i(z), coeffs).value;
  return std::exp(-(z * z)) * w;
}

Complex erfc_cr_series(Complex z, const CoefficientTable& coeffs) {
  if (!detail::is_finite(z) || z == Complex(0.0, 0.0)) {
    std::ostringstream msg;
    msg << "erfc_cr_series: requires finite nonzero z, got (" << z.real() << ", " << z.imag()
        << ")";
    throw DomainError(msg.str());
  }
  const double h = coeffs.params().h();
  const Complex z2 = z * z;
  Complex sum{0.0, 0.0};
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    const double nh2 = (n * h) * (n * h);
    sum += detail::real_over(std::exp(-nh2), nh2 + z2);
  }
  const Complex bracket = detail::real_over(1.0, z2) + 2.0 * sum;
  return (h / std::numbers::pi) * z * std::exp(-z2) * bracket;
}

}  // namespace cef
