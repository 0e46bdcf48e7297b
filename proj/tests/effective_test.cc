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

#include "gtest/gtest.h"

namespace dpsqkd {
namespace {

double lhs(double r, double e, double d) { return 1.0 - binary_entropy(r * e) - r * d; }

TEST(BinaryEntropy, KnownValues) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-14);
  EXPECT_NEAR(binary_entropy(0.11), binary_entropy(0.89), 1e-15);
  EXPECT_THROW(binary_entropy(-0.1), std::invalid_argument);
  EXPECT_THROW(binary_entropy(1.1), std::invalid_argument);
}

TEST(SolveR, PerfectAttackSaturates) {
  const EffectiveErrorSolution s = solve_r(0.0, 1.0);
  EXPECT_EQ(s.r_star, 1.0);
  EXPECT_EQ(s.effective_error, 0.0);
}

TEST(SolveR, NinePulseRowBothRules) {
  EXPECT_NEAR(solve_r(0.0290, 0.982).effective_error, 0.0239, 0.001);
  EXPECT_NEAR(solve_r_full_rate(0.0290, 0.982).effective_error, 0.0239, 0.001);
}

// Oracle: dense scan for the first sign change of the left-hand side.
TEST(SolveR, MatchesDenseGridOracle) {
  const double e = 0.25;
  const double d = 0.5;
  double oracle = 1.0;
  const int n = 1000000;
  for (int i = 1; i <= n; ++i) {
    const double r = static_cast<double>(i) / n;
    if (lhs(r, e, d) < 0.0) {
      oracle = r;
      break;
    }
  }
  const EffectiveErrorSolution s = solve_r(e, d);
  EXPECT_FALSE(s.saturated);
  EXPECT_NEAR(s.r_star, oracle, 2.0 / n);
  EXPECT_NEAR(s.r_star, 0.68, 0.005);
  EXPECT_NEAR(s.effective_error, 0.17, 0.002);
}

TEST(SolveR, DegenerateInputs) {
  EXPECT_THROW(solve_r(0.0, 0.0), std::domain_error);
  EXPECT_THROW(solve_r(0.6, 0.5), std::invalid_argument);
  EXPECT_THROW(solve_r(0.1, 1.5), std::invalid_argument);
}

TEST(SolveR, NoRootBelowOne) {
  // Left-hand side stays positive on (0, 1].
  const EffectiveErrorSolution s = solve_r(0.01, 0.3);
  EXPECT_EQ(s.r_star, 1.0);
  EXPECT_TRUE(s.saturated);
  EXPECT_DOUBLE_EQ(s.effective_error, 0.01);
}

TEST(SolveR, ResidualAndBoundsOnAGrid) {
  for (double e = 0.01; e <= 0.5; e += 0.01) {
    for (double d = 0.05; d <= 1.0; d += 0.05) {
      const EffectiveErrorSolution s = solve_r(e, d);
      EXPECT_LE(s.effective_error, e + 1e-15);
      if (!s.saturated) {
        EXPECT_LT(std::abs(lhs(s.r_star, e, d)), 1e-9) << e << ' ' << d;
      }
    }
  }
}

TEST(SolveR, MonotoneInErrorAndDetection) {
  double previous = 0.0;
  for (double e = 0.02; e <= 0.2; e += 0.02) {
    const double r = solve_r(e, 0.9).r_star;
    if (previous > 0.0) {
      EXPECT_LT(r, previous);
    }
    previous = r;
  }
  EXPECT_GT(solve_r(0.05, 0.8).r_star, solve_r(0.05, 0.95).r_star);
}

TEST(FullRate, TabulatedRows) {
  struct Row {
    double e, d, eff;
  };
  for (const Row& row : {Row{0.105, 0.881, 0.0614}, Row{0.0353, 0.977, 0.0282},
                         Row{0.0243, 0.987, 0.0206}}) {
    EXPECT_NEAR(solve_r_full_rate(row.e, row.d).effective_error, row.eff, 0.001);
  }
  const EffectiveErrorSolution s = solve_r_full_rate(0.1, 0.9);
  EXPECT_NEAR(s.r_star, (1.0 - binary_entropy(0.1)) / 0.9, 1e-15);
}

TEST(Rule, NamesRoundTrip) {
  for (auto rule : {EffectiveErrorRule::kExactRoot, EffectiveErrorRule::kFullRate}) {
    EXPECT_EQ(parse_effective_error_rule(to_string(rule)), rule);
  }
  EXPECT_FALSE(parse_effective_error_rule("bogus").has_value());
}

TEST(KeyRate, Examples) {
  EXPECT_NEAR(key_rate_upper_bound(1e-3, 0.0, 0.0, 0.9), 1e-3, 1e-18);
  EXPECT_NEAR(key_rate_upper_bound(1e-3, 0.5, 0.0, 0.9), 0.0, 1e-18);
  EXPECT_NEAR(key_rate_upper_bound(1.0, 0.1, 0.5, 0.4), 1.0 - binary_entropy(0.1) - 0.2, 1e-15);
}

TEST(KeyRate, VanishesAtTheRoot) {
  for (double e : {0.05, 0.1, 0.25}) {
    const EffectiveErrorSolution s = solve_r(e, 0.9);
    ASSERT_FALSE(s.saturated);
    EXPECT_NEAR(key_rate_upper_bound(1.0, s.effective_error, s.r_star, 0.9), 0.0, 1e-9);
  }
}

}  // namespace
}  // namespace dpsqkd
