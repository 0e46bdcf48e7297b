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

#ifndef DPSQKD_ATTACK_H_
#define DPSQKD_ATTACK_H_

#include <cstdint>
#include <vector>

#include "dpsqkd/profile.h"

namespace dpsqkd {

/// Output of Bob's delay-line interferometer for a single-photon input.
///
/// det0[j] / det1[j] are the real amplitudes reaching the detectors that
/// report z = 0 and z = 1 in slot first_slot + j.
struct DetectionAmplitudes {
  int first_slot = 0;
  std::vector<double> det0;
  std::vector<double> det1;

  int last_slot() const { return first_slot + static_cast<int>(det0.size()) - 1; }
  double probability(int slot, int detector) const;
  double total_probability() const;
};

/// Rates for one amplitude profile. `suppression` and `effective_error`
/// are filled in by the effective-error rule (see effective.h).
struct AttackRates {
  double error_rate = 0.0;      // E(k)
  double detection_rate = 0.0;  // D(k)
  double suppression = 1.0;     // r*
  double effective_error = 0.0; // r* E(k)
};

/// Pulse i interferes with pulse i - 1:
///   det0_i = (s_i A_i + s_{i-1} A_{i-1}) / 2,
///   det1_i = (-s_i A_i + s_{i-1} A_{i-1}) / 2,  s_i = (-1)^{y_i}.
DetectionAmplitudes interferometer_amplitudes(const AmplitudeProfile& profile,
                                              const PhaseAssignment& phases);

/// E(k) averaged analytically over Eve's random padding phases:
///   1/4 sum_{a<i<a+k} (A_i - A_{i-1})^2 + 1/4 sum_{i<=a or i>=a+k} (A_i^2 + A_{i-1}^2).
double error_rate(const AmplitudeProfile& profile);

/// D(k) = 1/2 sum_{a<i<a+k} (A_i^2 + A_{i-1}^2); error events inside the
/// window count as known bits.
double detection_rate(const AmplitudeProfile& profile);

struct BruteForceRates {
  double error_rate = 0.0;
  double detection_rate = 0.0;
};

inline constexpr int kMaxBruteForcePaddingBits = 24;

/// Independent check of error_rate/detection_rate. Enumerates every choice
/// of the padding phases in the `pad` slots on each side of the window,
/// propagates each through interferometer_amplitudes against Alice's bits
/// (drawn from `alice_seed`), and averages. Slots whose interference
/// involves a phase beyond the enumerated band contribute their averaged
/// value (A_i^2 + A_{i-1}^2) / 4.
/// Throws std::invalid_argument unless 1 <= pad and 2 * pad <= 24.
BruteForceRates brute_force_rates(const AmplitudeProfile& profile, int pad,
                                  std::uint64_t alice_seed = 0);

}  // namespace dpsqkd

#endif  // DPSQKD_ATTACK_H_
