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

#include "dpsqkd/params.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

namespace dpsqkd {
namespace {

ExperimentParams direct(double nbar, double t, double d, double mu) {
  ExperimentParams p;
  p.mean_photon_number = nbar;
  p.transmission = t;
  p.dark_count = d;
  p.baseline_error = mu;
  return p;
}

LinkParams practical_link(double length_km) {
  return LinkParams{0.2, length_km, 2.0, 0.1};
}

TEST(Transmission, LosslessLinkIsOne) {
  EXPECT_DOUBLE_EQ(transmission(LinkParams{0.0, 0.0, 0.0, 1.0}), 1.0);
}

TEST(Transmission, HundredKilometreComponents) {
  // 22 dB total times 4e-3.
  const double t = transmission(LinkParams{0.2, 100.0, 2.0, 4e-3});
  EXPECT_NEAR(t, 2.5238e-5, 1e-9);
  EXPECT_NEAR(t, std::pow(10.0, -2.2) * 4e-3, 1e-18);
}

TEST(Transmission, NinetyFiveKilometresIsThirtyOneDb) {
  EXPECT_NEAR(transmission(practical_link(95.0)), std::pow(10.0, -3.1), 1e-15);
}

TEST(Transmission, MultiplicativeInLength) {
  LinkParams unit{0.2, 0.0, 0.0, 1.0};
  for (double l1 : {3.0, 17.5, 40.0}) {
    for (double l2 : {0.0, 11.0, 55.5}) {
      LinkParams a = unit, b = unit, ab = unit;
      a.length_km = l1;
      b.length_km = l2;
      ab.length_km = l1 + l2;
      EXPECT_NEAR(transmission(ab), transmission(a) * transmission(b), 1e-15);
    }
  }
}

TEST(Transmission, RejectsInvalidLinks) {
  EXPECT_THROW(transmission(LinkParams{-0.1, 1.0, 0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(transmission(LinkParams{0.2, -1.0, 0.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(transmission(LinkParams{0.2, 1.0, -2.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(transmission(LinkParams{0.2, 1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(transmission(LinkParams{0.2, 1.0, 0.0, 1.5}), std::invalid_argument);
}

TEST(PClick, NoSignalNoDarkCounts) {
  EXPECT_EQ(p_click(direct(0.2, 0.0, 0.0, 0.0)), 0.0);
}

TEST(PClick, DiamantiSetupWithinOnePercent) {
  ExperimentParams p;
  p.mean_photon_number = 0.2;
  p.link = LinkParams{0.2, 100.0, 2.0, 4e-3};
  p.dark_count = 3.5e-8;
  EXPECT_NEAR(p_click(p), 5.12e-6, 0.01 * 5.12e-6);
}

TEST(PClick, NinetyFiveKilometresAtPointThree) {
  EXPECT_NEAR(p_click(direct(0.30, std::pow(10.0, -3.1), 1e-5, 0.01)), 2.483e-4, 1e-7);
}

TEST(PClick, StrictlyIncreasingInEachArgument) {
  const ExperimentParams base = direct(0.2, 1e-3, 1e-5, 0.01);
  const double ref = p_click(base);
  EXPECT_GT(p_click(direct(0.21, 1e-3, 1e-5, 0.01)), ref);
  EXPECT_GT(p_click(direct(0.2, 1.1e-3, 1e-5, 0.01)), ref);
  EXPECT_GT(p_click(direct(0.2, 1e-3, 2e-5, 0.01)), ref);
}

TEST(PClick, RejectsNonphysicalTotal) {
  EXPECT_THROW(p_click(direct(5.0, 0.5, 0.0, 0.0)), std::domain_error);
}

TEST(PClick, DirectTransmissionWinsWithWarning) {
  ExperimentParams p = direct(0.2, 1e-3, 0.0, 0.0);
  p.link = LinkParams{0.2, 100.0, 2.0, 4e-3};
  EXPECT_DOUBLE_EQ(p_click(p), 2e-4);
  ASSERT_EQ(p.warnings().size(), 1u);
}

TEST(PClick, RejectsInvalidParameters) {
  EXPECT_THROW(p_click(direct(0.0, 1e-3, 0.0, 0.0)), std::invalid_argument);
  EXPECT_THROW(p_click(direct(0.2, 1.5, 0.0, 0.0)), std::invalid_argument);
  EXPECT_THROW(p_click(direct(0.2, 1e-3, 1.0, 0.0)), std::invalid_argument);
  EXPECT_THROW(p_click(direct(0.2, 1e-3, 0.0, 0.5)), std::invalid_argument);
  ExperimentParams no_t;
  no_t.mean_photon_number = 0.2;
  EXPECT_THROW(p_click(no_t), std::invalid_argument);
}

TEST(EExp, ErrorFreeSystem) { EXPECT_EQ(e_exp(direct(0.2, 1e-3, 0.0, 0.0)), 0.0); }

TEST(EExp, DarkCountFreeLimitIsMu) {
  for (double t : {1e-5, 1e-3, 0.5}) {
    for (double nbar : {0.05, 0.3, 1.0}) {
      EXPECT_DOUBLE_EQ(e_exp(direct(nbar, t, 0.0, 0.013)), 0.013);
    }
  }
}

TEST(EExp, NinetyFiveKilometresAtPointThree) {
  EXPECT_NEAR(e_exp(direct(0.30, std::pow(10.0, -3.1), 1e-5, 0.01)), 0.0302, 1e-4);
}

TEST(EExp, UndefinedWithoutClicks) {
  EXPECT_THROW(e_exp(direct(0.2, 0.0, 0.0, 0.01)), std::domain_error);
}

TEST(EExp, LimitsAndMonotonicity) {
  const double t = 1e-3;
  // Dark counts dominate: half of them are errors on top of the baseline.
  EXPECT_NEAR(e_exp(direct(1e-9, t, 1e-5, 0.01)), 0.51, 1e-4);
  EXPECT_NEAR(e_exp(direct(0.3, t, 1e-14, 0.01)), 0.01, 1e-9);
  double previous = 1.0;
  for (double nbar = 0.01; nbar < 1.0; nbar += 0.01) {
    const double value = e_exp(direct(nbar, t, 1e-5, 0.01));
    EXPECT_LT(value, previous);
    previous = value;
  }
}

TEST(EExp, MeasuredQberOverridesFormula) {
  ExperimentParams p = direct(0.2, 1e-3, 1e-5, 0.01);
  p.measured_qber = 0.034;
  EXPECT_DOUBLE_EQ(e_exp(p), 0.034);
}

}  // namespace
}  // namespace dpsqkd
