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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cef/analysis.hpp"
#include "cef/errors.hpp"

using namespace cef;

namespace {

const CoefficientTable& defaults() {
  static const CoefficientTable table = build_coefficients({});
  return table;
}

GridSpec row(double y, int nx = 20) { return {0.01, 15.0, y, y, nx, 1, Spacing::logarithmic}; }

/// Best of `runs` throughput measurements, to damp scheduler noise.
double best_throughput(BenchMethod method, long n, std::optional<BenchRegion> region = std::nullopt,
                       int runs = 5) {
  double best = 0.0;
  for (int i = 0; i < runs; ++i) {
    best = std::max(best, measure_throughput(method, n, 42, defaults(), region).throughput);
  }
  return best;
}

}  // namespace

TEST_CASE("grid nodes") {
  const GridSpec lin{0.0, 1.0, 1.0, 3.0, 5, 3, Spacing::linear};
  CHECK(lin.x_nodes() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(lin.y_nodes() == std::vector<double>{1.0, 2.0, 3.0});

  const GridSpec log{0.01, 100.0, 1e-4, 1.0, 5, 5, Spacing::logarithmic};
  const auto xs = log.x_nodes();
  CHECK(xs.front() == 0.01);
  CHECK(xs.back() == 100.0);
  CHECK(xs[2] == doctest::Approx(1.0).epsilon(1e-14));

  const GridSpec single{2.0, 2.0, 3.0, 3.0, 1, 1, Spacing::linear};
  CHECK(single.x_nodes() == std::vector<double>{2.0});
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridSpec({2.0, 1.0, 1.0, 2.0, 3, 3, Spacing::linear}).validate(), ParameterError);
  CHECK_THROWS_AS(GridSpec({0.0, 1.0, 0.0, 2.0, 3, 3, Spacing::linear}).validate(), ParameterError);
  CHECK_THROWS_AS(GridSpec({0.0, 1.0, 2.0, 1.0, 3, 3, Spacing::linear}).validate(), ParameterError);
  CHECK_THROWS_AS(GridSpec({0.0, 1.0, 1.0, 2.0, 0, 3, Spacing::linear}).validate(), ParameterError);
  CHECK_THROWS_AS(GridSpec({0.0, 1.0, 1.0, 2.0, 3, 3, Spacing::logarithmic}).validate(), ParameterError);
  CHECK_NOTHROW(GridSpec({0.0, 1.0, 1.0, 2.0, 3, 3, Spacing::linear}).validate());
}

TEST_CASE("error_scan reproduces the small-y failure of the Chiarella-Reichel series") {
  const auto good = error_scan(row(2.5), ScanMethod::cr, ScanReference::oracle, defaults());
  MESSAGE("y = 2.5: " << good.max_rel_error);
  CHECK(good.max_rel_error <= 1e-13);

  const auto bad = error_scan(row(0.1), ScanMethod::cr, ScanReference::oracle, defaults());
  MESSAGE("y = 0.1: " << bad.max_rel_error << " at x = " << bad.argmax_x);
  CHECK(bad.max_rel_error >= 1e-2);
}

TEST_CASE("error envelope of w_cr is nonincreasing in y") {
  double previous = INFINITY;
  for (double y : {0.1, 0.5, 1.0, 2.5, 5.0}) {
    const auto report = error_scan(row(y), ScanMethod::cr, ScanReference::oracle, defaults());
    MESSAGE("y = " << y << ": " << report.max_rel_error);
    // 10% slack per step; once both rows are at the rounding floor (< 1e-14)
    // their order is noise.
    CHECK((report.max_rel_error <= 1.1 * previous || report.max_rel_error < 1e-14));
    previous = report.max_rel_error;
  }
}

TEST_CASE("error_scan report bookkeeping") {
  const GridSpec grid{0.5, 8.0, 0.05, 3.0, 6, 5, Spacing::logarithmic};
  const auto report = error_scan(grid, ScanMethod::cr, ScanReference::refined, defaults());
  REQUIRE(report.per_point);
  CHECK(report.per_point->size() == 30);
  const auto worst = std::max_element(report.per_point->begin(), report.per_point->end(),
                                      [](auto& a, auto& b) { return a.rel_error < b.rel_error; });
  CHECK(report.max_rel_error == worst->rel_error);
  CHECK(report.argmax_x == worst->x);
  CHECK(report.argmax_y == worst->y);
  CHECK(report.max_rel_error >= 0.0);
  // rows are y-major
  CHECK((*report.per_point)[0].y == (*report.per_point)[5].y);
  CHECK((*report.per_point)[0].y != (*report.per_point)[6].y);

  const auto threaded =
      error_scan(grid, ScanMethod::cr, ScanReference::refined, defaults(), {}, {true, 3});
  for (std::size_t i = 0; i < 30; ++i) {
    CHECK((*threaded.per_point)[i].rel_error == (*report.per_point)[i].rel_error);
  }
  const auto slim = error_scan(grid, ScanMethod::cr, ScanReference::refined, defaults(), {}, {false, 1});
  CHECK_FALSE(slim.per_point);
  CHECK(slim.max_rel_error == report.max_rel_error);

  const auto self = error_scan(grid, ScanMethod::refined, ScanReference::refined, defaults());
  CHECK(self.max_rel_error == 0.0);
}

TEST_CASE("error_scan tags oracle failures with the grid node") {
  const GridSpec grid{0.0, 0.0, 1000.0, 1000.0, 1, 1, Spacing::linear};
  try {
    static_cast<void>(error_scan(grid, ScanMethod::refined, ScanReference::oracle, defaults(),
                                 {50.0, 1e-14, 1}));
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("grid node (x=0, y=1000)") != std::string::npos);
  }
}

TEST_CASE("benchmark arguments") {
  for (auto region : {BenchRegion::full, BenchRegion::low_y, BenchRegion::high_y}) {
    const auto a = bench_arguments(region, 20000, 9);
    CHECK(a == bench_arguments(region, 20000, 9));
    CHECK(a != bench_arguments(region, 20000, 10));
    for (const Complex& z : a) {
      CHECK((z.real() >= 0.0 && z.real() < 15.0));
      switch (region) {
        case BenchRegion::full: CHECK((z.imag() > 0.0 && z.imag() <= 15.0)); break;
        case BenchRegion::low_y: CHECK((z.imag() > 0.0 && z.imag() < 1.0)); break;
        case BenchRegion::high_y: CHECK((z.imag() >= 1.0 && z.imag() < 15.0)); break;
      }
    }
  }
  Lcg64 rng(0);
  // first output of the generator from state 0 is the increment
  CHECK(rng.next_unit() == static_cast<double>(1442695040888963407ULL >> 11) * 0x1.0p-53);
}

TEST_CASE("measure_throughput") {
  SUBCASE("report fields") {
    const auto r = measure_throughput(BenchMethod::cr, 10000, 7, defaults());
    CHECK(r.points_evaluated == 10000);
    CHECK(r.wall_time > 0.0);
    CHECK(r.throughput == doctest::Approx(10000 / r.wall_time));
    CHECK(r.region == BenchRegion::full);
    CHECK(std::isfinite(r.checksum));
  }
  SUBCASE("deterministic checksum") {
    for (auto m : {BenchMethod::cr, BenchMethod::refined, BenchMethod::adaptive_low_y,
                   BenchMethod::adaptive_high_y}) {
      CHECK(measure_throughput(m, 10000, 7, defaults()).checksum ==
            measure_throughput(m, 10000, 7, defaults()).checksum);
    }
  }
  SUBCASE("adaptive and refined agree on low-y points") {
    const double adaptive = measure_throughput(BenchMethod::adaptive_low_y, 50000, 3, defaults()).checksum;
    const double refined =
        measure_throughput(BenchMethod::refined, 50000, 3, defaults(), BenchRegion::low_y).checksum;
    CHECK(std::abs(adaptive - refined) <= 1e-12 * std::abs(refined));
  }
  SUBCASE("high-y adaptive path costs the same as w_cr") {
    // Interleaved pairs in alternating order, summarized by the median ratio:
    // a burst of machine load or a warm-up effect skews a few pairs at most.
    constexpr int pairs = 21;
    std::vector<double> ratios;
    for (int i = 0; i < pairs; ++i) {
      double adaptive = 0.0;
      double cr = 0.0;
      for (int k = 0; k < 2; ++k) {
        if ((i + k) % 2 == 0) {
          adaptive = best_throughput(BenchMethod::adaptive_high_y, 200000, {}, 1);
        } else {
          cr = best_throughput(BenchMethod::cr, 200000, BenchRegion::high_y, 1);
        }
      }
      ratios.push_back(adaptive / cr);
    }
    std::nth_element(ratios.begin(), ratios.begin() + pairs / 2, ratios.end());
    const double ratio = ratios[pairs / 2];
    MESSAGE("adaptive_high_y / cr median throughput ratio " << ratio);
    CHECK(std::abs(ratio - 1.0) <= 0.10);
  }
  SUBCASE("too few points") {
    CHECK_THROWS_AS(static_cast<void>(measure_throughput(BenchMethod::cr, 9999, 1, defaults())),
                    ParameterError);
  }
}

TEST_CASE("identifier round trips") {
  for (auto m : {ScanMethod::refined, ScanMethod::cr, ScanMethod::adaptive}) {
    CHECK(parse_scan_method(to_string(m)) == m);
  }
  for (auto m : {BenchMethod::refined, BenchMethod::cr, BenchMethod::adaptive_low_y,
                 BenchMethod::adaptive_high_y}) {
    CHECK(parse_bench_method(to_string(m)) == m);
  }
  CHECK(parse_scan_reference("oracle") == ScanReference::oracle);
  CHECK_FALSE(parse_scan_method("erf"));
}
