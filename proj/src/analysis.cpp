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

#include "cef/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "cef/errors.hpp"

namespace cef {

namespace {

std::vector<double> axis_nodes(double lo, double hi, int count, Spacing spacing) {
  std::vector<double> nodes(static_cast<std::size_t>(count));
  if (count == 1) {
    nodes[0] = lo;
    return nodes;
  }
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    nodes[i] = spacing == Spacing::logarithmic ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
  }
  nodes.back() = hi;
  return nodes;
}

Complex evaluate(ScanMethod method, Complex z, const CoefficientTable& coeffs) {
  switch (method) {
    case ScanMethod::refined: return w_refined(z, coeffs);
    case ScanMethod::cr: return w_cr(z, coeffs);
    case ScanMethod::adaptive: return w_adaptive(z, coeffs).value;
  }
  return {};
}

Complex reference_value(ScanReference reference, Complex z, const CoefficientTable& coeffs,
                        const QuadratureSpec& spec) {
  if (reference == ScanReference::refined) {
    return w_refined(z, coeffs);
  }
  try {
    return w_quadrature(z, spec);
  } catch (const ConvergenceError& e) {
    std::ostringstream msg;
    msg << "oracle failed at grid node (x=" << z.real() << ", y=" << z.imag() << "): " << e.what();
    throw ConvergenceError(msg.str());
  }
}

}  // namespace

void GridSpec::validate() const {
  std::ostringstream msg;
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min <= x_max)) {
    msg << "grid requires finite x_min <= x_max, got [" << x_min << ", " << x_max << "]";
  } else if (!std::isfinite(y_max) || !(y_min > 0.0) || !(y_min <= y_max)) {
    msg << "grid requires 0 < y_min <= y_max, got [" << y_min << ", " << y_max << "]";
  } else if (nx < 1 || ny < 1) {
    msg << "grid requires nx, ny >= 1, got " << nx << " x " << ny;
  } else if (spacing == Spacing::logarithmic && !(x_min > 0.0)) {
    msg << "logarithmic spacing requires x_min > 0, got " << x_min;
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

std::vector<double> GridSpec::x_nodes() const { return axis_nodes(x_min, x_max, nx, spacing); }
std::vector<double> GridSpec::y_nodes() const { return axis_nodes(y_min, y_max, ny, spacing); }

AccuracyReport error_scan(const GridSpec& grid, ScanMethod method, ScanReference reference,
                          const CoefficientTable& coeffs, const QuadratureSpec& spec,
                          const ScanOptions& options) {
  grid.validate();
  if (reference == ScanReference::oracle) {
    spec.validate();
  }
  const auto xs = grid.x_nodes();
  const auto ys = grid.y_nodes();
  const std::size_t total = xs.size() * ys.size();
  std::vector<ErrorSample> samples(total);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double x = xs[k % xs.size()];
      const double y = ys[k / xs.size()];
      const Complex z{x, y};
      const Complex ref = reference_value(reference, z, coeffs, spec);
      const Complex val = evaluate(method, z, coeffs);
      samples[k] = {x, y, std::abs(val - ref) / std::max(std::abs(ref), 1e-300)};
    }
  };

  const auto jobs = static_cast<std::size_t>(std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(options.jobs, 1)), 1, std::max<std::size_t>(total, 1)));
  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (total + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t begin = std::min(total, j * chunk);
      const std::size_t end = std::min(total, begin + chunk);
      workers.emplace_back([&, j, begin, end] {
        try {
          work(begin, end);
        } catch (...) {
          failures[j] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  AccuracyReport report{grid, method, reference, 0.0, 0.0, 0.0, std::nullopt};
  const auto worst = std::max_element(
      samples.begin(), samples.end(),
      [](const ErrorSample& a, const ErrorSample& b) { return a.rel_error < b.rel_error; });
  report.max_rel_error = worst->rel_error;
  report.argmax_x = worst->x;
  report.argmax_y = worst->y;
  if (options.keep_per_point) {
    report.per_point = std::move(samples);
  }
  return report;
}

BenchRegion default_region(BenchMethod method) noexcept {
  switch (method) {
    case BenchMethod::adaptive_low_y: return BenchRegion::low_y;
    case BenchMethod::adaptive_high_y: return BenchRegion::high_y;
    default: return BenchRegion::full;
  }
}

std::uint64_t Lcg64::next() noexcept {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

double Lcg64::next_unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Lcg64::next_open_unit() noexcept {
  return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<Complex> bench_arguments(BenchRegion region, long n_points, std::uint64_t seed) {
  Lcg64 rng(seed);
  std::vector<Complex> points;
  points.reserve(static_cast<std::size_t>(std::max(n_points, 0L)));
  for (long i = 0; i < n_points; ++i) {
    const double x = 15.0 * rng.next_unit();
    double y = 0.0;
    switch (region) {
      case BenchRegion::full: y = 15.0 * (1.0 - rng.next_unit()); break;
      case BenchRegion::low_y: y = rng.next_open_unit(); break;
      case BenchRegion::high_y: y = 1.0 + 14.0 * rng.next_unit(); break;
    }
    points.emplace_back(x, y);
  }
  return points;
}

BenchReport measure_throughput(BenchMethod method, long n_points, std::uint64_t seed,
                               const CoefficientTable& coeffs, std::optional<BenchRegion> region) {
  if (n_points < 10'000) {
    std::ostringstream msg;
    msg << "measure_throughput needs at least 10000 points, got " << n_points;
    throw ParameterError(msg.str());
  }
  const BenchRegion where = region.value_or(default_region(method));
  const auto points = bench_arguments(where, n_points, seed);

  Complex sum{0.0, 0.0};
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case BenchMethod::refined:
      for (const Complex& z : points) sum += w_refined(z, coeffs);
      break;
    case BenchMethod::cr:
      for (const Complex& z : points) sum += w_cr(z, coeffs);
      break;
    case BenchMethod::adaptive_low_y:
    case BenchMethod::adaptive_high_y:
      for (const Complex& z : points) sum += w_adaptive(z, coeffs).value;
      break;
  }
  const auto stop = std::chrono::steady_clock::now();

  BenchReport report{method, where};
  report.points_evaluated = n_points;
  report.wall_time = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
  report.throughput = static_cast<double>(n_points) / report.wall_time;
  report.checksum = sum.real() + sum.imag();
  return report;
}

std::string_view to_string(Spacing v) noexcept {
  return v == Spacing::linear ? "linear" : "logarithmic";
}

std::string_view to_string(ScanMethod v) noexcept {
  switch (v) {
    case ScanMethod::refined: return "refined";
    case ScanMethod::cr: return "cr";
    case ScanMethod::adaptive: return "adaptive";
  }
  return "unknown";
}

std::string_view to_string(ScanReference v) noexcept {
  return v == ScanReference::oracle ? "oracle" : "refined";
}

std::string_view to_string(BenchMethod v) noexcept {
  switch (v) {
    case BenchMethod::refined: return "refined";
    case BenchMethod::cr: return "cr";
    case BenchMethod::adaptive_low_y: return "adaptive_low_y";
    case BenchMethod::adaptive_high_y: return "adaptive_high_y";
  }
  return "unknown";
}

std::string_view to_string(BenchRegion v) noexcept {
  switch (v) {
    case BenchRegion::full: return "full";
    case BenchRegion::low_y: return "low_y";
    case BenchRegion::high_y: return "high_y";
  }
  return "unknown";
}

std::optional<ScanMethod> parse_scan_method(std::string_view name) noexcept {
  for (auto m : {ScanMethod::refined, ScanMethod::cr, ScanMethod::adaptive}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<ScanReference> parse_scan_reference(std::string_view name) noexcept {
  for (auto r : {ScanReference::oracle, ScanReference::refined}) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

std::optional<BenchMethod> parse_bench_method(std::string_view name) noexcept {
  for (auto m : {BenchMethod::refined, BenchMethod::cr, BenchMethod::adaptive_low_y,
                 BenchMethod::adaptive_high_y}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

}  // namespace cef
