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

// Shared helpers for the test suites: error measures and an independent
// real-axis erfc evaluated in 80-bit long double.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace cef::testing {

inline double rel_error(std::complex<double> value, std::complex<double> reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

inline double rel_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

/// Distance between a and b in units of the last place of the larger one.
inline double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  const double scale = std::max(std::abs(a), std::abs(b));
  const double ulp = std::nextafter(scale, std::numeric_limits<double>::infinity()) - scale;
  return std::abs(a - b) / ulp;
}

/// erfc(x), x >= 0. Positive-term Maclaurin series for erf below 2,
/// continued fraction above; both in long double.
inline long double erfc_oracle(long double x) {
  const long double pi = std::numbers::pi_v<long double>;
  if (x < 2.0L) {
    // erf(x) = 2/sqrt(pi) e^{-x^2} sum_k 2^k x^{2k+1} / (1 3 5 ... (2k+1))
    long double term = x;
    long double sum = x;
    for (int k = 1; k < 400; ++k) {
      term *= 2.0L * x * x / (2.0L * k + 1.0L);
      sum += term;
      if (term < sum * 1e-22L) break;
    }
    return 1.0L - 2.0L / std::sqrt(pi) * std::exp(-x * x) * sum;
  }
  // erfc(x) = e^{-x^2}/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  long double tail = x;
  for (int k = 4000; k >= 1; --k) {
    tail = x + (0.5L * k) / tail;
  }
  return std::exp(-x * x) / std::sqrt(pi) / tail;
}

}  // namespace cef::testing
