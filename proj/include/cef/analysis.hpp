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

// Accuracy maps of the series kernels against a reference, and throughput
// measurements of the individual evaluation paths.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cef/coefficients.hpp"
#include "cef/oracle.hpp"
#include "cef/series.hpp"

namespace cef {

enum class Spacing { linear, logarithmic };

struct GridSpec {
  double x_min = 0.01;
  double x_max = 15.0;
  double y_min = 1e-4;
  double y_max = 15.0;
  int nx = 20;
  int ny = 20;
  Spacing spacing = Spacing::logarithmic;

  /// Throws ParameterError on an empty or inverted range, a non-positive
  /// y_min, or a logarithmic x axis that reaches zero.
  void validate() const;

  [[nodiscard]] std::vector<double> x_nodes() const;
  [[nodiscard]] std::vector<double> y_nodes() const;
};

enum class ScanMethod { refined, cr, adaptive };
enum class ScanReference { oracle, refined };

struct ErrorSample {
  double x;
  double y;
  double rel_error;
};

struct AccuracyReport {
  GridSpec grid;
  ScanMethod method;
  ScanReference reference;
  double max_rel_error = 0.0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  std::optional<std::vector<ErrorSample>> per_point;  // row-major, y outer
};

struct ScanOptions {
  bool keep_per_point = true;
  int jobs = 1;  // worker threads; output is independent of this
};

/// Evaluates `method` and `reference` on every grid node and records
/// |method - reference| / max(|reference|, 1e-300).
/// Oracle failures are rethrown as ConvergenceError naming the node.
[[nodiscard]] AccuracyReport error_scan(const GridSpec& grid, ScanMethod method,
                                        ScanReference reference, const CoefficientTable& coeffs,
                                        const QuadratureSpec& spec = {},
                                        const ScanOptions& options = {});

enum class BenchMethod { refined, cr, adaptive_low_y, adaptive_high_y };

/// Where benchmark arguments are drawn from; x is always uniform in [0, 15).
///   full:   y in (0, 15]
///   low_y:  y in (0, 1)
///   high_y: y in [1, 15)
enum class BenchRegion { full, low_y, high_y };

[[nodiscard]] BenchRegion default_region(BenchMethod method) noexcept;

struct BenchReport {
  BenchMethod method;
  BenchRegion region;
  long points_evaluated = 0;
  double wall_time = 0.0;   // seconds
  double throughput = 0.0;  // evaluations per second
  double checksum = 0.0;    // sum of Re + Im over all results
};

/// 64-bit linear congruential generator
///   state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64),
/// seeded with state = seed; each draw uses the top 53 bits.
class Lcg64 {
public:
  explicit Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  /// Uniform in [0, 1).
  double next_unit() noexcept;
  /// Uniform in (0, 1).
  double next_open_unit() noexcept;

private:
  std::uint64_t next() noexcept;
  std::uint64_t state_;
};

/// Deterministic benchmark arguments for `region`.
[[nodiscard]] std::vector<Complex> bench_arguments(BenchRegion region, long n_points,
                                                   std::uint64_t seed);

/// Single-threaded timing of `method` over n_points >= 10^4 arguments drawn
/// from `region` (default_region(method) when omitted). Argument generation
/// is excluded from the timing.
[[nodiscard]] BenchReport measure_throughput(BenchMethod method, long n_points,
                                             std::uint64_t seed, const CoefficientTable& coeffs,
                                             std::optional<BenchRegion> region = std::nullopt);

[[nodiscard]] std::string_view to_string(Spacing v) noexcept;
[[nodiscard]] std::string_view to_string(ScanMethod v) noexcept;
[[nodiscard]] std::string_view to_string(ScanReference v) noexcept;
[[nodiscard]] std::string_view to_string(BenchMethod v) noexcept;
[[nodiscard]] std::string_view to_string(BenchRegion v) noexcept;

// Inverse of to_string; std::nullopt for unknown names.
[[nodiscard]] std::optional<ScanMethod> parse_scan_method(std::string_view name) noexcept;
[[nodiscard]] std::optional<ScanReference> parse_scan_reference(std::string_view name) noexcept;
[[nodiscard]] std::optional<BenchMethod> parse_bench_method(std::string_view name) noexcept;

}  // namespace cef
