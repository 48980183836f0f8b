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

#include "cef/series.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cef/errors.hpp"
#include "series_detail.hpp"

namespace cef {

namespace detail {

void require_upper_half_plane(Complex z, std::string_view who) {
  if (!is_finite(z)) {
    std::ostringstream msg;
    msg << who << ": argument (" << z.real() << ", " << z.imag() << ") is not finite";
    throw DomainError(msg.str());
  }
  if (!(z.imag() > 0.0)) {
    std::ostringstream msg;
    msg << who << ": requires Im z > 0, got z = (" << z.real() << ", " << z.imag()
        << "); use w_full_plane";
    throw DomainError(msg.str());
  }
}

}  // namespace detail

namespace {

using detail::complex_over;
using detail::real_over;
using detail::times_i;

/// i [1/(t z) - 2 t z S]; shared by w_cr and the common part of w_adaptive so
/// both produce bit-identical results.
Complex bracket(Complex tz, Complex sum) noexcept {
  const Complex inv_tz = real_over(1.0, tz);
  return inv_tz - 2.0 * (tz * sum);
}

Complex common_sum(const CoefficientTable& coeffs, Complex t2z2) noexcept {
  const auto damping = coeffs.damping();
  const auto pole_sq = coeffs.pole_sq();
  Complex sum{0.0, 0.0};
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    const Complex denom = pole_sq[n] - t2z2;
    sum += real_over(damping[n], denom);
  }
  return sum;
}

/// e^{i t z}
Complex phase_factor(Complex tz) noexcept { return std::exp(times_i(tz)); }

}  // namespace

std::string_view to_string(EvaluationPath path) noexcept {
  switch (path) {
    case EvaluationPath::refined: return "refined";
    case EvaluationPath::common_only: return "common_only";
    case EvaluationPath::full_decomposition: return "full_decomposition";
    case EvaluationPath::symmetry_extended: return "symmetry_extended";
    case EvaluationPath::exact_special_case: return "exact_special_case";
  }
  return "unknown";
}

Complex w_refined(Complex z, const CoefficientTable& coeffs) {
  detail::require_upper_half_plane(z, "w_refined");

  const double tau = coeffs.tau_m();
  const Complex tz = tau * z;
  const Complex t2z2 = coeffs.tau_m_sq() * (z * z);
  const Complex e = phase_factor(tz);
  const auto a = coeffs.a();
  const auto pole_sq = coeffs.pole_sq();

  Complex sum{0.0, 0.0};
  double sign = 1.0;
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    sign = -sign;
    const Complex denom = pole_sq[n] - t2z2;
    assert(denom != Complex(0.0, 0.0));
    sum += complex_over(a[n] * (sign * e - 1.0), denom);
  }

  const Complex head = times_i(complex_over(1.0 - e, tz));
  const Complex scale = times_i(coeffs.tau_m_sq() * z / std::sqrt(std::numbers::pi));
  return head + scale * sum;
}

Complex w_cr(Complex z, const CoefficientTable& coeffs) {
  detail::require_upper_half_plane(z, "w_cr");
  const Complex tz = coeffs.tau_m() * z;
  const Complex t2z2 = coeffs.tau_m_sq() * (z * z);
  return times_i(bracket(tz, common_sum(coeffs, t2z2)));
}

Complex w_cr_step_form(Complex z, const CoefficientTable& coeffs) {
  detail::require_upper_half_plane(z, "w_cr_step_form");
  const long double pi = std::numbers::pi_v<long double>;
  const long double h_ext = pi / static_cast<long double>(coeffs.tau_m());
  const double h = static_cast<double>(h_ext);

  const Complex z2 = z * z;
  Complex sum{0.0, 0.0};
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    const long double nh = static_cast<long double>(n) * h_ext;
    const double weight = static_cast<double>(std::exp(-nh * nh));
    sum += real_over(weight, static_cast<double>(nh * nh) - z2);
  }
  const double h_over_pi = static_cast<double>(h_ext / pi);
  const Complex head = times_i(real_over(h_over_pi, z));
  const Complex tail = times_i((2.0 * h / std::numbers::pi) * z * sum);
  return head - tail;
}

Complex refining_part(Complex z, const CoefficientTable& coeffs) {
  detail::require_upper_half_plane(z, "refining_part");
  const Complex tz = coeffs.tau_m() * z;
  const Complex t2z2 = coeffs.tau_m_sq() * (z * z);
  const auto damping = coeffs.damping();
  const auto pole_sq = coeffs.pole_sq();

  Complex sum{0.0, 0.0};
  double sign = 1.0;
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    sign = -sign;
    sum += sign * real_over(damping[n], pole_sq[n] - t2z2);
  }
  return -times_i(phase_factor(tz) * bracket(tz, sum));
}

EvaluationOutcome w_adaptive(Complex z, const CoefficientTable& coeffs) {
  detail::require_upper_half_plane(z, "w_adaptive");
  const Complex tz = coeffs.tau_m() * z;
  const Complex t2z2 = coeffs.tau_m_sq() * (z * z);

  if (!(z.imag() < coeffs.params().y_switch)) {
    return {times_i(bracket(tz, common_sum(coeffs, t2z2))), EvaluationPath::common_only};
  }

  // Both sums share each term's denominator; the alternating one differs only
  // by sign.
  const auto damping = coeffs.damping();
  const auto pole_sq = coeffs.pole_sq();
  Complex common{0.0, 0.0};
  Complex alternating{0.0, 0.0};
  double sign = 1.0;
  for (int n = 1; n <= coeffs.n_terms(); ++n) {
    sign = -sign;
    const Complex term = real_over(damping[n], pole_sq[n] - t2z2);
    common += term;
    alternating += sign * term;
  }
  const Complex common_part = times_i(bracket(tz, common));
  const Complex refining = -times_i(phase_factor(tz) * bracket(tz, alternating));
  return {common_part + refining, EvaluationPath::full_decomposition};
}

}  // namespace cef
