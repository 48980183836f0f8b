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

#include "cef/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "cef/errors.hpp"
#include "series_detail.hpp"

namespace cef {

namespace {

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss
// weights (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Integrand = std::function<Complex(double)>;

struct Panel {
  double lo;
  double hi;
  Complex value;
  double error;
  bool settled;  // roundoff-limited; bisecting further cannot help
};

Panel integrate_panel(const Integrand& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const Complex f_center = f(center);
  Complex kronrod = kKronrodWeights[7] * f_center;
  Complex gauss = kGaussWeights[3] * f_center;
  double magnitude = kKronrodWeights[7] * std::abs(f_center);
  for (int j = 0; j < 7; ++j) {
    const double offset = half * kKronrodNodes[j];
    const Complex f_sum = f(center - offset) + f(center + offset);
    kronrod += kKronrodWeights[j] * f_sum;
    magnitude += kKronrodWeights[j] * std::abs(f_sum);
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * f_sum;
    }
  }

  Panel panel{lo, hi, kronrod * half, std::abs(kronrod - gauss) * half, false};
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * magnitude * half;
  if (panel.error <= floor || half < 1e-12 * std::max(1.0, std::abs(center))) {
    panel.settled = true;
  }
  return panel;
}

Complex adaptive_integrate(const Integrand& f, double lo, double hi, double max_width,
                           const QuadratureSpec& spec, Complex z) {
  std::vector<Panel> panels;
  const auto count = static_cast<long>(std::ceil((hi - lo) / max_width));
  panels.reserve(static_cast<std::size_t>(count) + 64);
  for (long k = 0; k < count; ++k) {
    const double a = lo + static_cast<double>(k) * max_width;
    const double b = std::min(hi, lo + static_cast<double>(k + 1) * max_width);
    if (b > a) {
      panels.push_back(integrate_panel(f, a, b));
    }
  }

  auto worse = [&panels](std::size_t i, std::size_t j) { return panels[i].error < panels[j].error; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);
  double total_error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    total_error += panels[i].error;
    if (!panels[i].settled) {
      queue.push(i);
    }
  }

  int subdivisions = 0;
  while (total_error > spec.abs_tol && !queue.empty()) {
    if (subdivisions >= spec.max_subdivisions) {
      std::ostringstream msg;
      msg << "quadrature did not converge at z = (" << z.real() << ", " << z.imag()
          << "): error estimate " << total_error << " > " << spec.abs_tol << " after "
          << subdivisions << " subdivisions";
      throw ConvergenceError(msg.str());
    }
    const std::size_t worst = queue.top();
    queue.pop();
    const Panel old = panels[worst];
    const double mid = 0.5 * (old.lo + old.hi);
    panels[worst] = integrate_panel(f, old.lo, mid);
    panels.push_back(integrate_panel(f, mid, old.hi));
    total_error += panels[worst].error + panels.back().error - old.error;
    ++subdivisions;
    if (!panels[worst].settled) {
      queue.push(worst);
    }
    if (!panels.back().settled) {
      queue.push(panels.size() - 1);
    }
  }

  // Summed in abscissa order with Neumaier compensation so that results do
  // not depend on the order in which panels were refined.
  std::sort(panels.begin(), panels.end(),
            [](const Panel& p, const Panel& q) { return p.lo < q.lo; });
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
  auto accumulate = [](double& sum, double& comp, double v) {
    const double t = sum + v;
    comp += (std::abs(sum) >= std::abs(v)) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  for (const Panel& p : panels) {
    accumulate(re, re_c, p.value.real());
    accumulate(im, im_c, p.value.imag());
  }
  return {re + re_c, im + im_c};
}

}  // namespace

void QuadratureSpec::validate() const {
  std::ostringstream msg;
  if (!(tau_max > 0.0) || !std::isfinite(tau_max)) {
    msg << "tau_max must be positive and finite, got " << tau_max;
  } else if (!(abs_tol > 0.0)) {
    msg << "abs_tol must be positive, got " << abs_tol;
  } else if (max_subdivisions < 1) {
    msg << "max_subdivisions must be at least 1, got " << max_subdivisions;
  } else {
    return;
  }
  throw ParameterError(msg.str());
}

Complex w_quadrature(Complex z, const QuadratureSpec& spec) {
  spec.validate();
  detail::require_upper_half_plane(z, "w_quadrature");
  const double x = z.real();
  const double y = z.imag();
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

  const Integrand integrand = [=](double t) {
    const double envelope = inv_sqrt_pi * std::exp(-0.25 * t * t - y * t);
    return Complex(envelope * std::cos(x * t), envelope * std::sin(x * t));
  };
  const double max_width = std::numbers::pi / (4.0 * std::max(1.0, std::abs(x)));
  return adaptive_integrate(integrand, 0.0, spec.tau_max, max_width, spec, z);
}

Complex w_finite_quadrature(Complex z, const CoefficientTable& coeffs,
                            const QuadratureSpec& spec) {
  spec.validate();
  detail::require_upper_half_plane(z, "w_finite_quadrature");
  const double x = z.real();
  const double y = z.imag();
  const double tau = coeffs.tau_m();
  const int n_terms = coeffs.n_terms();
  const auto a = coeffs.a();
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

  const Integrand integrand = [=](double t) {
    double kernel = 0.5 * a[0];
    for (int n = 1; n <= n_terms; ++n) {
      kernel += a[n] * std::cos(n * std::numbers::pi * t / tau);
    }
    const double envelope = inv_sqrt_pi * kernel * std::exp(-y * t);
    return Complex(envelope * std::cos(x * t), envelope * std::sin(x * t));
  };
  const double top_frequency = std::abs(x) + n_terms * std::numbers::pi / tau;
  const double max_width = std::numbers::pi / (4.0 * std::max(1.0, top_frequency));
  return adaptive_integrate(integrand, 0.0, tau, max_width, spec, z);
}

}  // namespace cef
