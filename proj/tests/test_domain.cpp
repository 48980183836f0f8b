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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cef/domain.hpp"
#include "cef/errors.hpp"
#include "cef/oracle.hpp"
#include "support.hpp"

using namespace cef;
using cef::testing::rel_error;

namespace {

const CoefficientTable& defaults() {
  static const CoefficientTable table = build_coefficients({});
  return table;
}

// y_switch above 1 so that the (1, 1) row is evaluated with the refining part.
const CoefficientTable& refined_at_one() {
  static const CoefficientTable table = build_coefficients({12.0, 23, 1.5});
  return table;
}

}  // namespace

TEST_CASE("native domain") {
  CHECK(is_in_native_domain({1.0, 1.0}));
  CHECK_FALSE(is_in_native_domain({1.0, -1.0}));
  CHECK_FALSE(is_in_native_domain({1.0, 0.0}));
}

TEST_CASE("w(0) is exactly one") {
  const auto out = w_full_plane({0.0, 0.0}, defaults());
  CHECK(out.value == Complex(1.0, 0.0));
  CHECK(out.path == EvaluationPath::exact_special_case);
  CHECK(w_full_plane({-0.0, -0.0}, defaults()).value == Complex(1.0, 0.0));
}

TEST_CASE("negative real part by conjugation") {
  const auto out = w_full_plane({-1.0, 1.0}, defaults());
  CHECK(out.path == EvaluationPath::symmetry_extended);
  CHECK(out.value == std::conj(w_adaptive({1.0, 1.0}, defaults()).value));

  // At the default switch, y = 1 runs the common part alone, which is good to
  // a few 1e-10 there.
  const Complex tabulated{3.047442052569125E-1, -2.082189382028317E-1};
  CHECK(rel_error(out.value, tabulated) <= 1e-9);
  CHECK(rel_error(w_full_plane({-1.0, 1.0}, refined_at_one()).value, tabulated) <= 1e-14);
}

TEST_CASE("conjugation symmetry is exact") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(0.0, 15.0), uy(1e-6, 6.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = ux(rng), y = uy(rng);
    CHECK(w_full_plane({-x, y}, defaults()).value == std::conj(w_full_plane({x, y}, defaults()).value));
  }
}

TEST_CASE("lower half-plane by reflection") {
  // 2 exp(-z^2) - w(-1 + i) in 40-digit arithmetic.
  const Complex expected{-1.137037878351197366452e0, 2.026813791854195018079e0};
  const auto out = w_full_plane({1.0, -1.0}, defaults());
  CHECK(out.path == EvaluationPath::symmetry_extended);
  CHECK(rel_error(out.value, expected) <= 1e-9);
  CHECK(rel_error(w_full_plane({1.0, -1.0}, refined_at_one()).value, expected) <= 1e-13);

  // Same point through the integral oracle continued by reflection.
  const Complex z{1.0, -1.0};
  const Complex continued = 2.0 * std::exp(-(z * z)) - w_quadrature(-z);
  CHECK(rel_error(continued, expected) <= 1e-13);
}

TEST_CASE("reflection identity on random points") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ux(-5.0, 5.0), uy(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Complex z{ux(rng), uy(rng)};
    const Complex a = w_full_plane(z, defaults()).value;
    const Complex b = w_full_plane(-z, defaults()).value;
    const Complex target = 2.0 * std::exp(-(z * z));
    const double scale = std::max({std::abs(target), std::abs(a), std::abs(b)});
    worst = std::max(worst, std::abs(a + b - target) / scale);
  }
  MESSAGE("worst reflection residual " << worst);
  CHECK(worst <= 1e-12);
}

TEST_CASE("real axis") {
  SUBCASE("real part is exp(-x^2)") {
    for (double x : {0.5, 1.0, 2.0, 3.0}) {
      const auto out = w_full_plane({x, 0.0}, defaults());
      CHECK(out.path == EvaluationPath::refined);
      CHECK(rel_error(out.value.real(), std::exp(-x * x)) <= 1e-10);
      CHECK(w_full_plane({-x, 0.0}, defaults()).value == std::conj(out.value));
    }
  }
  SUBCASE("imaginary part is the scaled Dawson function") {
    // 2/sqrt(pi) exp(-x^2) int_0^x exp(t^2) dt, 30-digit quadrature.
    CHECK(rel_error(w_real_axis(0.5, defaults()).imag(), 0.47892517290104347254) <= 1e-13);
    CHECK(rel_error(w_real_axis(2.0, defaults()).imag(), 0.34002621706606620128) <= 1e-13);
  }
  SUBCASE("removable singularities at x = n pi / tau_m") {
    const double pi = std::numbers::pi;
    const double on_pole = 5.0 * pi / 12.0;
    const Complex w = w_real_axis(on_pole, defaults());
    CHECK(std::isfinite(w.real()));
    CHECK(std::isfinite(w.imag()));
    CHECK(rel_error(w.imag(), 0.54283491474428325275) <= 1e-13);
    CHECK(rel_error(w.real(), std::exp(-on_pole * on_pole)) <= 1e-12);
    CHECK(rel_error(w_real_axis(3.0 * pi / 12.0, defaults()).imag(), 0.59780598866963161507) <= 1e-13);
    // nearby abscissae and the upper half-plane just above agree
    for (double dx : {-1e-6, -1e-10, 1e-10, 1e-6}) {
      CHECK(rel_error(w_real_axis(on_pole + dx, defaults()), w) <= 2e-6);
    }
    CHECK(rel_error(w_refined({on_pole, 1e-7}, defaults()), w) <= 1e-6);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(static_cast<void>(w_full_plane({0.0, -27.0}, defaults())), OverflowError);
  CHECK_THROWS_AS(static_cast<void>(w_full_plane({1.0, -26.5}, defaults())), OverflowError);
  CHECK_NOTHROW(static_cast<void>(w_full_plane({0.0, -26.0}, defaults())));
  CHECK(std::isfinite(std::abs(w_full_plane({0.0, -26.0}, defaults()).value)));
  CHECK_THROWS_AS(static_cast<void>(w_full_plane({std::nan(""), 1.0}, defaults())), DomainError);
  CHECK_THROWS_AS(static_cast<void>(w_full_plane({1.0, -INFINITY}, defaults())), DomainError);
  CHECK_THROWS_AS(static_cast<void>(w_real_axis(0.0, defaults())), DomainError);
}
