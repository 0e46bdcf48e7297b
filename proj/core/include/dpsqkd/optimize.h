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

#ifndef DPSQKD_OPTIMIZE_H_
#define DPSQKD_OPTIMIZE_H_

#include <functional>
#include <vector>

#include "dpsqkd/effective.h"

namespace dpsqkd {

/// Search interval and resolution for the per-k sigma optimization.
struct SigmaSearch {
  double lo = 0.2;
  double hi = 8.0;
  double grid_step = 0.01;
  double tolerance = 1e-5;
};

struct ScalarMinimum {
  double argmin = 0.0;
  double value = 0.0;
};

/// Golden-section search for a minimum of `f` on [lo, hi], stopping when
/// the bracket is narrower than `tolerance`.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tolerance);

/// Coarse grid scan over [search.lo, search.hi] followed by golden-section
/// refinement around the best grid point.
ScalarMinimum grid_then_golden(const std::function<double(double)>& f, const SigmaSearch& search);

/// One row of the optimized gaussian table.
struct OptimizedRow {
  int k = 0;
  double sigma_star = 0.0;
  double error_rate = 0.0;
  double detection_rate = 0.0;
  EffectiveErrorSolution effective;
};

/// Minimizes E(k) of the discretized gaussian over sigma and reports the
/// rates at the optimum. Requires k >= 2.
OptimizedRow optimize_sigma(int k, EffectiveErrorRule rule = kDefaultEffectiveErrorRule,
                            const SigmaSearch& search = {});

/// Rows for k_min..k_max inclusive.
std::vector<OptimizedRow> optimize_table(int k_min, int k_max,
                                         EffectiveErrorRule rule = kDefaultEffectiveErrorRule);

/// First-order continuum estimate 1/(16 sigma^2) + 1 - erf(k / (2 sqrt2 sigma)).
double approx_error_continuous(double k, double sigma);

/// The same estimate before the tail integral is collapsed:
/// 1/(16 sigma^2) + erfc(k / (2 sqrt2 sigma)) / 2. It tracks the discrete
/// E(k) as k, sigma grow together.
double approx_error_tail_integral(double k, double sigma);

/// erf(k / (2 sqrt2 sigma)).
double approx_detection_continuous(double k, double sigma);

/// min over sigma in `search` of approx_error_continuous(k, .).
ScalarMinimum minimize_approx_error(double k, const SigmaSearch& search = {});

}  // namespace dpsqkd

#endif  // DPSQKD_OPTIMIZE_H_
