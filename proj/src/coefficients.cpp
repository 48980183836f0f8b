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

#include "cef/coefficients.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "cef/errors.hpp"

namespace cef {

double SeriesParams::h() const noexcept { return std::numbers::pi / tau_m; }

void SeriesParams::validate() const {
  std::ostringstream msg;
  if (!(tau_m > 0.0) || !std::isfinite(tau_m)) {
    msg << "tau_m must be positive and finite, got " << tau_m;
  } else if (n_terms < 1) {
    msg << "n_terms must be at least 1, got " << n_terms;
  } else if (!(y_switch >= 0.0) || std::isnan(y_switch)) {
    msg << "y_switch must be nonnegative, got " << y_switch;
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

CoefficientTable::CoefficientTable(const SeriesParams& params) : params_(params) {
  params_.validate();

  const auto n_count = static_cast<std::size_t>(params_.n_terms) + 1;
  a_.resize(n_count);
  damping_.resize(n_count);
  pole_sq_.resize(n_count);

  const long double pi = std::numbers::pi_v<long double>;
  const long double tau = params_.tau_m;
  const long double scale = 2.0L * std::sqrt(pi) / tau;
  const long double ratio = pi * pi / (tau * tau);

  tau_m_sq_ = static_cast<double>(tau * tau);
  for (std::size_t n = 0; n < n_count; ++n) {
    const auto nn = static_cast<long double>(n * n);
    const long double damp = std::exp(-nn * ratio);
    damping_[n] = static_cast<double>(damp);
    a_[n] = static_cast<double>(scale * damp);
    pole_sq_[n] = static_cast<double>(nn * pi * pi);
  }

  // The kernels rely on a strictly decreasing, strictly positive table.
  for (std::size_t n = 0; n < n_count; ++n) {
    if (!(a_[n] >= std::numeric_limits<double>::min()) || (n > 0 && !(a_[n] < a_[n - 1]))) {
      std::ostringstream msg;
      msg << "coefficient a[" << n << "] = " << a_[n] << " for tau_m = " << params_.tau_m
          << ", n_terms = " << params_.n_terms
          << " is not a strictly decreasing normal double; reduce n_terms or tau_m";
      throw ParameterError(msg.str());
    }
  }
}

CoefficientTable build_coefficients(const SeriesParams& params) {
  return CoefficientTable(params);
}

}  // namespace cef
