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

// Arithmetic helpers shared by the series kernels. Not part of the public API.

#include <cmath>
#include <string_view>

#include "cef/series.hpp"

namespace cef::detail {

/// r / d using a single real division.
inline Complex real_over(double r, Complex d) noexcept {
  const double s = r / (d.real() * d.real() + d.imag() * d.imag());
  return {d.real() * s, -d.imag() * s};
}

/// num / d using a single real division.
inline Complex complex_over(Complex num, Complex d) noexcept {
  const double s = 1.0 / (d.real() * d.real() + d.imag() * d.imag());
  return {(num.real() * d.real() + num.imag() * d.imag()) * s,
          (num.imag() * d.real() - num.real() * d.imag()) * s};
}

inline Complex times_i(Complex v) noexcept { return {-v.imag(), v.real()}; }

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws DomainError unless z is finite with Im z > 0.
void require_upper_half_plane(Complex z, std::string_view who);

}  // namespace cef::detail
