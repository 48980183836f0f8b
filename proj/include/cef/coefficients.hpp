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

#include <cstddef>
#include <span>
#include <vector>

namespace cef {

/// Parameters shared by every series kernel.
///
/// `tau_m` is the half-period of the Fourier expansion of exp(-t^2/4),
/// `n_terms` the number of cosine terms N, and `y_switch` the Im(z)
/// threshold below which the adaptive kernel turns the refining part on.
struct SeriesParams {
  double tau_m = 12.0;
  int n_terms = 23;
  double y_switch = 1.0;

  /// Step parameter h = pi / tau_m.
  [[nodiscard]] double h() const noexcept;

  /// Throws ParameterError unless tau_m > 0, n_terms >= 1 and y_switch >= 0.
  void validate() const;

  friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

/// Precomputed Fourier coefficients a_n = (2 sqrt(pi) / tau_m) exp(-n^2 pi^2 / tau_m^2)
/// for n = 0..N, together with the per-term constants the kernels need.
///
/// Every entry is evaluated in extended precision and rounded once, so each
/// value is correctly rounded or within an ulp of it. Immutable after
/// construction; share freely between threads.
class CoefficientTable {
public:
  explicit CoefficientTable(const SeriesParams& params);

  [[nodiscard]] const SeriesParams& params() const noexcept { return params_; }
  [[nodiscard]] int n_terms() const noexcept { return params_.n_terms; }

  /// a[0..N].
  [[nodiscard]] std::span<const double> a() const noexcept { return a_; }
  [[nodiscard]] double a(int n) const { return a_.at(static_cast<std::size_t>(n)); }

  /// exp(-n^2 pi^2 / tau_m^2) for n = 0..N.
  [[nodiscard]] std::span<const double> damping() const noexcept { return damping_; }

  /// n^2 pi^2 for n = 0..N.
  [[nodiscard]] std::span<const double> pole_sq() const noexcept { return pole_sq_; }

  [[nodiscard]] double tau_m() const noexcept { return params_.tau_m; }
  [[nodiscard]] double tau_m_sq() const noexcept { return tau_m_sq_; }

private:
  SeriesParams params_;
  double tau_m_sq_;
  std::vector<double> a_;
  std::vector<double> damping_;
  std::vector<double> pole_sq_;
};

/// Validates `params` and builds the table.
[[nodiscard]] CoefficientTable build_coefficients(const SeriesParams& params);

}  // namespace cef
