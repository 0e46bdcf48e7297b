// Copyright 2026 The dpsqkd Authors
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

#include "dpsqkd/optimize.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dpsqkd/attack.h"
#include "dpsqkd/profile.h"

namespace dpsqkd {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tolerance) {
  if (!(lo < hi)) {
    throw std::invalid_argument("golden-section bracket must satisfy lo < hi");
  }
  const double inv_phi = 1.0 / std::numbers::phi;
  double c = hi - (hi - lo) * inv_phi;
  double d = lo + (hi - lo) * inv_phi;
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tolerance) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * inv_phi;
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * inv_phi;
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

ScalarMinimum grid_then_golden(const std::function<double(double)>& f, const SigmaSearch& search) {
  if (!(search.lo > 0.0 && search.lo < search.hi && search.grid_step > 0.0)) {
    throw std::invalid_argument("invalid sigma search interval");
  }
  const auto steps = static_cast<int>(std::floor((search.hi - search.lo) / search.grid_step + 1e-9));
  ScalarMinimum best{search.lo, f(search.lo)};
  int best_index = 0;
  for (int n = 1; n <= steps; ++n) {
    const double x = search.lo + n * search.grid_step;
    const double v = f(x);
    if (v < best.value) {
      best = {x, v};
      best_index = n;
    }
  }
  const double lo = std::max(search.lo, search.lo + (best_index - 1) * search.grid_step);
  const double hi = std::min(search.hi, search.lo + (best_index + 1) * search.grid_step);
  ScalarMinimum refined = golden_section_minimize(f, lo, hi, search.tolerance);
  // A minimum on the interval boundary is kept as found on the grid.
  return refined.value <= best.value ? refined : best;
}

OptimizedRow optimize_sigma(int k, EffectiveErrorRule rule, const SigmaSearch& search) {
  if (k < 2) {
    throw std::invalid_argument("sigma optimization needs k >= 2");
  }
  auto objective = [k](double sigma) { return error_rate(gaussian(k, sigma)); };
  const ScalarMinimum best = grid_then_golden(objective, search);

  const AmplitudeProfile profile = gaussian(k, best.argmin);
  OptimizedRow row;
  row.k = k;
  row.sigma_star = best.argmin;
  row.error_rate = error_rate(profile);
  row.detection_rate = detection_rate(profile);
  row.effective = effective_error(row.error_rate, row.detection_rate, rule);
  return row;
}

std::vector<OptimizedRow> optimize_table(int k_min, int k_max, EffectiveErrorRule rule) {
  if (k_min < 2 || k_max < k_min) {
    throw std::invalid_argument("table range must satisfy 2 <= k_min <= k_max");
  }
  std::vector<OptimizedRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (int k = k_min; k <= k_max; ++k) {
    rows.push_back(optimize_sigma(k, rule));
  }
  return rows;
}

namespace {

double erf_argument(double k, double sigma) {
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("sigma must be > 0");
  }
  return k / (2.0 * std::numbers::sqrt2 * sigma);
}

}  // namespace

double approx_error_continuous(double k, double sigma) {
  const double x = erf_argument(k, sigma);
  return 1.0 / (16.0 * sigma * sigma) + 1.0 - std::erf(x);
}

double approx_error_tail_integral(double k, double sigma) {
  const double x = erf_argument(k, sigma);
  return 1.0 / (16.0 * sigma * sigma) + 0.5 * std::erfc(x);
}

double approx_detection_continuous(double k, double sigma) {
  return std::erf(erf_argument(k, sigma));
}

ScalarMinimum minimize_approx_error(double k, const SigmaSearch& search) {
  return grid_then_golden([k](double sigma) { return approx_error_continuous(k, sigma); }, search);
}

}  // namespace dpsqkd
