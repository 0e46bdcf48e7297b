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

#include "dpsqkd/attack.h"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dpsqkd {

double DetectionAmplitudes::probability(int slot, int detector) const {
  if (slot < first_slot || slot > last_slot()) {
    return 0.0;
  }
  const auto j = static_cast<std::size_t>(slot - first_slot);
  const double amp = detector == 0 ? det0[j] : det1[j];
  return amp * amp;
}

double DetectionAmplitudes::total_probability() const {
  double sum = 0.0;
  for (std::size_t j = 0; j < det0.size(); ++j) {
    sum += det0[j] * det0[j] + det1[j] * det1[j];
  }
  return sum;
}

DetectionAmplitudes interferometer_amplitudes(const AmplitudeProfile& profile,
                                              const PhaseAssignment& phases) {
  DetectionAmplitudes out;
  out.first_slot = profile.first_slot();
  // The last populated pulse still leaks into the following slot.
  const int last = profile.last_slot() + 1;
  out.det0.reserve(static_cast<std::size_t>(last - out.first_slot + 1));
  out.det1.reserve(out.det0.capacity());
  for (int i = out.first_slot; i <= last; ++i) {
    const double current = phases.sign(i) * profile.at(i);
    const double previous = phases.sign(i - 1) * profile.at(i - 1);
    out.det0.push_back(0.5 * (current + previous));
    out.det1.push_back(0.5 * (-current + previous));
  }
  return out;
}

double error_rate(const AmplitudeProfile& profile) {
  const Window& w = profile.window();
  double sum = 0.0;
  for (int i = profile.first_slot(); i <= profile.last_slot() + 1; ++i) {
    const double a = profile.at(i);
    const double b = profile.at(i - 1);
    if (i > w.start && i < w.end()) {
      sum += (a - b) * (a - b);
    } else {
      sum += a * a + b * b;
    }
  }
  return 0.25 * sum;
}

double detection_rate(const AmplitudeProfile& profile) {
  const Window& w = profile.window();
  double sum = 0.0;
  for (int i = w.start + 1; i < w.end(); ++i) {
    const double a = profile.at(i);
    const double b = profile.at(i - 1);
    sum += a * a + b * b;
  }
  return 0.5 * sum;
}

BruteForceRates brute_force_rates(const AmplitudeProfile& profile, int pad,
                                  std::uint64_t alice_seed) {
  if (pad < 1 || 2 * pad > kMaxBruteForcePaddingBits) {
    throw std::invalid_argument("brute-force padding must satisfy 1 <= pad and 2*pad <= 24");
  }
  const Window& w = profile.window();
  const int band_lo = w.start - pad;
  const int band_hi = w.end() - 1 + pad;
  const int first = profile.first_slot();
  const int last = profile.last_slot();
  auto in_band = [&](int slot) { return slot >= band_lo && slot <= band_hi; };

  // Alice's bits on every slot that can matter, one past either end.
  std::mt19937_64 rng(alice_seed);
  std::bernoulli_distribution coin(0.5);
  const int x_lo = std::min(first, band_lo) - 1;
  const int x_hi = std::max(last, band_hi) + 1;
  std::vector<std::uint8_t> alice(static_cast<std::size_t>(x_hi - x_lo + 1));
  for (auto& b : alice) {
    b = coin(rng) ? 1 : 0;
  }
  auto x = [&](int slot) { return alice[static_cast<std::size_t>(slot - x_lo)]; };

  std::vector<std::uint8_t> known;
  for (int slot = w.start; slot < w.end(); ++slot) {
    known.push_back(x(slot));
  }

  // Padding slots of the profile support, in slot order. Only those inside
  // the band take enumerated phases; the rest stay at 0.
  std::vector<int> padding_slots;
  for (int slot = first; slot <= last; ++slot) {
    if (!w.contains(slot)) {
      padding_slots.push_back(slot);
    }
  }

  // Contribution of slots interfering with a phase outside the band.
  double outside_error = 0.0;
  for (int i = first; i <= last + 1; ++i) {
    if (!(in_band(i) && in_band(i - 1))) {
      const double a = profile.at(i);
      const double b = profile.at(i - 1);
      outside_error += 0.25 * (a * a + b * b);
    }
  }

  const int bits = 2 * pad;
  const std::uint64_t assignments = std::uint64_t{1} << bits;
  std::vector<std::uint8_t> padding(padding_slots.size(), 0);
  double error_sum = 0.0;
  double detection_sum = 0.0;
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    for (std::size_t p = 0; p < padding_slots.size(); ++p) {
      const int slot = padding_slots[p];
      int bit_index = -1;
      if (slot >= band_lo && slot < w.start) {
        bit_index = slot - band_lo;
      } else if (slot >= w.end() && slot <= band_hi) {
        bit_index = pad + (slot - w.end());
      }
      padding[p] = bit_index < 0 ? 0 : static_cast<std::uint8_t>((mask >> bit_index) & 1U);
    }
    const PhaseAssignment phases(profile, known, padding);
    const DetectionAmplitudes out = interferometer_amplitudes(profile, phases);

    double error = 0.0;
    for (int i = band_lo + 1; i <= band_hi; ++i) {
      const int z = x(i) ^ x(i - 1);
      error += out.probability(i, 1 - z);
    }
    double detected = 0.0;
    for (int i = w.start + 1; i < w.end(); ++i) {
      detected += out.probability(i, 0) + out.probability(i, 1);
    }
    error_sum += error;
    detection_sum += detected;
  }
  const double n = static_cast<double>(assignments);
  return {error_sum / n + outside_error, detection_sum / n};
}

}  // namespace dpsqkd
