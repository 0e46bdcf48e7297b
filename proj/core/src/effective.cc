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

#include "dpsqkd/effective.h"

#include <cmath>
#include <stdexcept>

namespace dpsqkd {
namespace {

void check_rates(double error_rate, double detection_rate) {
  if (!(error_rate >= 0.0 && error_rate <= 0.5)) {
    throw std::invalid_argument("error rate E must lie in [0, 1/2]");
  }
  if (!(detection_rate >= 0.0 && detection_rate <= 1.0)) {
    throw std::invalid_argument("detection rate D must lie in [0, 1]");
  }
  if (error_rate == 0.0 && detection_rate == 0.0) {
    throw std::domain_error("no effective error: 1 - H2(rE) - rD is identically 1 for E = D = 0");
  }
}

double root_lhs(double r, double error_rate, double detection_rate) {
  return 1.0 - binary_entropy(r * error_rate) - r * detection_rate;
}

}  // namespace

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("binary entropy argument must lie in [0, 1]");
  }
  if (x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

EffectiveErrorSolution solve_r(double error_rate, double detection_rate) {
  check_rates(error_rate, detection_rate);
  EffectiveErrorSolution out;
  const double at_one = root_lhs(1.0, error_rate, detection_rate);
  if (at_one >= 0.0) {
    out.r_star = 1.0;
    out.saturated = at_one > 0.0;
    out.effective_error = error_rate;
    out.residual = at_one;
    return out;
  }
  // The left-hand side is positive near 0 and strictly decreasing on the
  // bracket, so bisection converges to the unique root.
  double lo = kRootBracketLow;
  double hi = 1.0;
  while (hi - lo >= kRootTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (root_lhs(mid, error_rate, detection_rate) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.r_star = 0.5 * (lo + hi);
  out.effective_error = out.r_star * error_rate;
  out.residual = root_lhs(out.r_star, error_rate, detection_rate);
  return out;
}

EffectiveErrorSolution solve_r_full_rate(double error_rate, double detection_rate) {
  check_rates(error_rate, detection_rate);
  const double budget = 1.0 - binary_entropy(error_rate);
  EffectiveErrorSolution out;
  if (detection_rate == 0.0 || budget >= detection_rate) {
    out.r_star = 1.0;
    out.saturated = budget > detection_rate;
  } else {
    out.r_star = budget / detection_rate;
  }
  out.effective_error = out.r_star * error_rate;
  out.residual = budget - out.r_star * detection_rate;
  return out;
}

EffectiveErrorSolution effective_error(double error_rate, double detection_rate,
                                       EffectiveErrorRule rule) {
  switch (rule) {
    case EffectiveErrorRule::kExactRoot:
      return solve_r(error_rate, detection_rate);
    case EffectiveErrorRule::kFullRate:
      return solve_r_full_rate(error_rate, detection_rate);
  }
  throw std::invalid_argument("unknown effective-error rule");
}

std::string_view to_string(EffectiveErrorRule rule) {
  return rule == EffectiveErrorRule::kExactRoot ? "exact" : "full-rate";
}

std::optional<EffectiveErrorRule> parse_effective_error_rule(std::string_view name) {
  if (name == "exact") {
    return EffectiveErrorRule::kExactRoot;
  }
  if (name == "full-rate") {
    return EffectiveErrorRule::kFullRate;
  }
  return std::nullopt;
}

double key_rate_upper_bound(double p_click, double e_exp, double r, double detection_rate) {
  return p_click * (1.0 - binary_entropy(e_exp) - r * detection_rate);
}

}  // namespace dpsqkd
