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

#ifndef DPSQKD_EFFECTIVE_H_
#define DPSQKD_EFFECTIVE_H_

#include <optional>
#include <string_view>

namespace dpsqkd {

/// H2(x) = -x log2 x - (1 - x) log2 (1 - x), exactly 0 at x = 0 and x = 1.
double binary_entropy(double x);

/// Result of suppressing the attacked fraction r until Eve's information
/// cancels Bob's: 1 - H2(.) - r D = 0.
struct EffectiveErrorSolution {
  double r_star = 1.0;
  double effective_error = 0.0;  // r_star * E
  double residual = 0.0;         // left-hand side evaluated at r_star
  // True when the left-hand side is still nonnegative at r = 1, i.e. no
  // root in (0, 1); r_star is then pinned at 1.
  bool saturated = false;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kRootBracketLow = 1e-15;

/// Solves 1 - H2(r E) - r D = 0 for r in (0, 1] by bisection on
/// [1e-15, 1] until the bracket is narrower than 1e-12.
/// Throws std::invalid_argument when E is outside [0, 1/2] or D outside
/// [0, 1], and std::domain_error when E = D = 0 (no root exists).
EffectiveErrorSolution solve_r(double error_rate, double detection_rate);

/// Closed form r = (1 - H2(E)) / D, with the entropy taken at the full
/// attack rate rather than at r E. This is the convention behind the
/// published per-k effective error table. Saturates at r = 1.
EffectiveErrorSolution solve_r_full_rate(double error_rate, double detection_rate);

/// Which of the two equations the analysis pipeline uses for E_eff.
enum class EffectiveErrorRule {
  kExactRoot,  // solve_r
  kFullRate,   // solve_r_full_rate
};

inline constexpr EffectiveErrorRule kDefaultEffectiveErrorRule = EffectiveErrorRule::kFullRate;

EffectiveErrorSolution effective_error(double error_rate, double detection_rate,
                                       EffectiveErrorRule rule);

std::string_view to_string(EffectiveErrorRule rule);
std::optional<EffectiveErrorRule> parse_effective_error_rule(std::string_view name);

/// Upper bound on the key rate, p_click (1 - H2(e_exp) - r D). Negative
/// values mean no secret key.
double key_rate_upper_bound(double p_click, double e_exp, double r, double detection_rate);

}  // namespace dpsqkd

#endif  // DPSQKD_EFFECTIVE_H_
