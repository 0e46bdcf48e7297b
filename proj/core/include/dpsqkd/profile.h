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

#ifndef DPSQKD_PROFILE_H_
#define DPSQKD_PROFILE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dpsqkd {

/// Slots [start, start + length) whose phases Eve learned by USD.
struct Window {
  int start = 0;
  int length = 1;

  int end() const { return start + length; }  // one past the last slot
  bool contains(int slot) const { return slot >= start && slot < end(); }
};

struct GaussianShape {
  double center = 0.0;
  double sigma = 1.0;
  double norm_constant = 1.0;
};

/// Tail mass (relative to the full infinite profile) a truncated gaussian
/// may discard.
inline constexpr double kTailMassBound = 1e-12;

/// Eve's single-photon amplitude profile A_i over integer time slots.
///
/// Amplitudes are stored as nonnegative reals on the contiguous support
/// [first_slot, last_slot]; every other slot has amplitude zero. Phase signs
/// live in PhaseAssignment.
class AmplitudeProfile {
 public:
  AmplitudeProfile(int first_slot, std::vector<double> amplitudes, Window window,
                   int truncation, std::optional<GaussianShape> shape = std::nullopt);

  double at(int slot) const;
  int first_slot() const { return first_slot_; }
  int last_slot() const { return first_slot_ + static_cast<int>(amplitudes_.size()) - 1; }
  std::span<const double> amplitudes() const { return amplitudes_; }
  const Window& window() const { return window_; }
  int truncation() const { return truncation_; }
  const std::optional<GaussianShape>& gaussian_shape() const { return shape_; }

  double squared_norm() const;

 private:
  int first_slot_;
  std::vector<double> amplitudes_;
  Window window_;
  int truncation_;
  std::optional<GaussianShape> shape_;
};

/// Flat profile 1/sqrt(k) on the window and zero elsewhere.
AmplitudeProfile rectangular(int k, int window_start = 0);

/// Discretized gaussian C exp(-(i - c)^2 / (4 sigma^2)) centred on the
/// window, c = a + (k - 1)/2. The truncation M is the smallest integer
/// (starting from ceil(8 sigma) + 1) whose discarded tail mass is below
/// kTailMassBound.
AmplitudeProfile gaussian(int k, double sigma, int window_start = 0);

/// Same as gaussian() but with an explicit truncation M.
AmplitudeProfile gaussian_truncated(int k, double sigma, int truncation, int window_start = 0);

/// Relative mass of the gaussian outside [a - M, a + k - 1 + M].
double gaussian_tail_mass(int k, double sigma, int truncation);

/// Scales `raw` (stored from `first_slot` on) to unit squared norm. The
/// support must cover the window. Rejects negative entries and all-zero
/// input.
AmplitudeProfile normalize(std::span<const double> raw, int first_slot, Window window);

/// Phases y_i of the slots Eve populates. Inside the window y_i equals
/// Alice's bit x_i; outside it is Eve's free (random) choice.
class PhaseAssignment {
 public:
  /// `known_phases` has window.length bits; `padding_phases` covers the
  /// profile support outside the window in slot order.
  PhaseAssignment(const AmplitudeProfile& profile, std::span<const std::uint8_t> known_phases,
                  std::span<const std::uint8_t> padding_phases);

  /// All-zero phases over the profile support.
  static PhaseAssignment zeros(const AmplitudeProfile& profile);

  int bit(int slot) const;
  double sign(int slot) const { return bit(slot) ? -1.0 : 1.0; }
  std::span<const std::uint8_t> known_phases() const { return known_; }

 private:
  PhaseAssignment(int first_slot, std::vector<std::uint8_t> bits, std::vector<std::uint8_t> known)
      : first_slot_(first_slot), bits_(std::move(bits)), known_(std::move(known)) {}

  int first_slot_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> known_;
};

}  // namespace dpsqkd

#endif  // DPSQKD_PROFILE_H_
