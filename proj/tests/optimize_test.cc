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

#include <cmath>

#include "dpsqkd/attack.h"
#include "dpsqkd/profile.h"
#include "gtest/gtest.h"

namespace dpsqkd {
namespace {

struct PrintedRow {
  int k;
  double sigma, e, d, eff;
};

constexpr PrintedRow kPrinted[] = {
    {4, 0.871, 0.105, 0.881, 0.0614},  {5, 1.03, 0.0748, 0.930, 0.0495},
    {6, 1.18, 0.0562, 0.954, 0.0405},  {7, 1.34, 0.0438, 0.968, 0.0335},
    {8, 1.49, 0.0353, 0.977, 0.0282},  {9, 1.63, 0.0290, 0.982, 0.0239},
    {10, 1.78, 0.0243, 0.987, 0.0206},
};

TEST(OptimizeSigma, ReproducesPrintedRows) {
  for (const PrintedRow& p : kPrinted) {
    const OptimizedRow row = optimize_sigma(p.k);
    EXPECT_NEAR(row.sigma_star, p.sigma, 0.02) << p.k;
    EXPECT_NEAR(row.error_rate, p.e, 0.001) << p.k;
    EXPECT_NEAR(row.detection_rate, p.d, 0.001) << p.k;
    EXPECT_NEAR(row.effective.effective_error, p.eff, 0.001) << p.k;
  }
}

TEST(OptimizeSigma, IsALocalMinimum) {
  for (int k = 4; k <= 10; ++k) {
    const OptimizedRow row = optimize_sigma(k);
    EXPECT_NEAR(error_rate(gaussian(k, row.sigma_star)), row.error_rate, 1e-15);
    for (double h : {1e-3, 1e-2}) {
      EXPECT_GT(error_rate(gaussian(k, row.sigma_star + h)), row.error_rate);
      EXPECT_GT(error_rate(gaussian(k, row.sigma_star - h)), row.error_rate);
    }
  }
}

TEST(OptimizeSigma, WidthGrowsAndErrorFallsWithK) {
  const std::vector<OptimizedRow> rows = optimize_table(4, 10);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].sigma_star, rows[i - 1].sigma_star);
    EXPECT_LT(rows[i].error_rate, rows[i - 1].error_rate);
  }
}

TEST(OptimizeSigma, RejectsShortRuns) { EXPECT_THROW(optimize_sigma(1), std::invalid_argument); }

TEST(GoldenSection, Quadratic) {
  const ScalarMinimum m =
      golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3) + 2.0; }, 0.0, 5.0, 1e-8);
  EXPECT_NEAR(m.argmin, 1.3, 1e-7);
  EXPECT_NEAR(m.value, 2.0, 1e-12);
}

TEST(GridThenGolden, FindsGlobalMinimumOfBumpyFunction) {
  auto f = [](double x) { return std::cos(5.0 * x) + 0.1 * (x - 4.0) * (x - 4.0); };
  const ScalarMinimum m = grid_then_golden(f, SigmaSearch{});
  // Oracle: fine scan.
  double best = 1e300;
  for (double x = 0.2; x <= 8.0; x += 1e-5) {
    best = std::min(best, f(x));
  }
  EXPECT_LE(m.value, best + 1e-9);
}

TEST(Continuum, QuarterWidthWindow) {
  const double sigma = 2.0;
  const double k = 4.0 * sigma;
  EXPECT_NEAR(approx_error_continuous(k, sigma), 1.0 / (k * k) + std::erfc(std::sqrt(2.0)), 1e-14);
  EXPECT_NEAR(approx_error_tail_integral(k, sigma), 1.0 / (k * k) + 0.0228, 1e-3);
  EXPECT_NEAR(approx_detection_continuous(k, sigma), 0.9545, 1e-4);
}

TEST(Continuum, Limits) {
  EXPECT_NEAR(approx_error_continuous(5.0, 1e6), 1.0, 1e-5);
  EXPECT_NEAR(approx_error_continuous(1e6, 3.0), 1.0 / 144.0, 1e-15);
  EXPECT_NEAR(approx_detection_continuous(1e6, 3.0), 1.0, 1e-15);
  EXPECT_NEAR(approx_detection_continuous(5.0, 1e6), 0.0, 1e-5);
}

TEST(Continuum, ErrorPlusDetectionIdentity) {
  for (double k = 2.0; k <= 12.0; k += 1.0) {
    for (double sigma = 0.5; sigma <= 4.0; sigma += 0.25) {
      EXPECT_GE(approx_error_continuous(k, sigma) + approx_detection_continuous(k, sigma),
                1.0 - 1.0 / (16.0 * sigma * sigma) - 1e-15);
    }
  }
}

TEST(Continuum, TailIntegralTracksLargeProfiles) {
  const double k = 200.0;
  const double sigma = 50.0;
  EXPECT_NEAR(error_rate(gaussian(200, sigma)), approx_error_tail_integral(k, sigma), 1e-3);
}

TEST(Continuum, MinimumWithinTenPercentForLongRuns) {
  for (int k = 8; k <= 10; ++k) {
    const double discrete = optimize_sigma(k).error_rate;
    const double approx = minimize_approx_error(k).value;
    EXPECT_LT(std::abs(approx - discrete) / discrete, 0.10) << k;
  }
}

}  // namespace
}  // namespace dpsqkd
