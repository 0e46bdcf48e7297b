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

#include "dpsqkd/profile.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace dpsqkd {
namespace {

void check_window_length(int k) {
  if (k < 1) {
    throw std::invalid_argument("window length k must be >= 1");
  }
}

void check_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be > 0");
  }
}

// Squared amplitudes are evaluated relative to the slot nearest the centre
// so that very narrow gaussians do not underflow to an all-zero profile.
struct ShiftedGaussian {
  double half_width;  // (k - 1) / 2, distance from c to either window edge
  double offset_sq;   // squared distance from c to the nearest slot
  double sigma;

  double squared(double distance) const {
    return std::exp(-(distance * distance - offset_sq) / (2.0 * sigma * sigma));
  }
};

ShiftedGaussian make_shifted(int k, double sigma) {
  const double half_width = 0.5 * (k - 1);
  const double nearest = (k % 2 == 1) ? 0.0 : 0.5;
  return {half_width, nearest * nearest, sigma};
}

// Sum of squared amplitudes on one side beyond the truncated support.
double one_sided_tail(const ShiftedGaussian& g, int truncation) {
  double sum = 0.0;
  for (int j = truncation + 1;; ++j) {
    const double term = g.squared(g.half_width + j);
    sum += term;
    if (term == 0.0 || term < sum * 1e-18) {
      break;
    }
  }
  return sum;
}

double support_sum(const ShiftedGaussian& g, int k, int truncation) {
  double sum = 0.0;
  for (int offset = -truncation; offset < k + truncation; ++offset) {
    sum += g.squared(offset - g.half_width);
  }
  return sum;
}

}  // namespace

AmplitudeProfile::AmplitudeProfile(int first_slot, std::vector<double> amplitudes, Window window,
                                   int truncation, std::optional<GaussianShape> shape)
    : first_slot_(first_slot),
      amplitudes_(std::move(amplitudes)),
      window_(window),
      truncation_(truncation),
      shape_(shape) {
  check_window_length(window_.length);
  if (amplitudes_.empty()) {
    throw std::invalid_argument("profile support must not be empty");
  }
  if (first_slot_ > window_.start || last_slot() < window_.end() - 1) {
    throw std::invalid_argument("profile support must cover the known-phase window");
  }
  for (double a : amplitudes_) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("amplitudes must be finite and nonnegative");
    }
  }
}

double AmplitudeProfile::at(int slot) const {
  if (slot < first_slot_ || slot > last_slot()) {
    return 0.0;
  }
  return amplitudes_[static_cast<std::size_t>(slot - first_slot_)];
}

double AmplitudeProfile::squared_norm() const {
  double sum = 0.0;
  for (double a : amplitudes_) {
    sum += a * a;
  }
  return sum;
}

AmplitudeProfile rectangular(int k, int window_start) {
  check_window_length(k);
  std::vector<double> amplitudes(static_cast<std::size_t>(k), 1.0 / std::sqrt(double(k)));
  return AmplitudeProfile(window_start, std::move(amplitudes), Window{window_start, k}, 0);
}

double gaussian_tail_mass(int k, double sigma, int truncation) {
  check_window_length(k);
  check_sigma(sigma);
  if (truncation < 0) {
    throw std::invalid_argument("truncation M must be >= 0");
  }
  const ShiftedGaussian g = make_shifted(k, sigma);
  const double tail = 2.0 * one_sided_tail(g, truncation);
  return tail / (support_sum(g, k, truncation) + tail);
}

AmplitudeProfile gaussian_truncated(int k, double sigma, int truncation, int window_start) {
  check_window_length(k);
  check_sigma(sigma);
  if (truncation < 0) {
    throw std::invalid_argument("truncation M must be >= 0");
  }
  const ShiftedGaussian g = make_shifted(k, sigma);
  const double norm = std::sqrt(support_sum(g, k, truncation));

  std::vector<double> amplitudes;
  amplitudes.reserve(static_cast<std::size_t>(k + 2 * truncation));
  for (int offset = -truncation; offset < k + truncation; ++offset) {
    amplitudes.push_back(std::sqrt(g.squared(offset - g.half_width)) / norm);
  }
  GaussianShape shape;
  shape.center = window_start + g.half_width;
  shape.sigma = sigma;
  // A_i = C exp(-(i-c)^2 / 4 sigma^2); undo the centre shift.
  shape.norm_constant = std::exp(-g.offset_sq / (4.0 * sigma * sigma)) / norm;
  return AmplitudeProfile(window_start - truncation, std::move(amplitudes),
                          Window{window_start, k}, truncation, shape);
}

AmplitudeProfile gaussian(int k, double sigma, int window_start) {
  check_window_length(k);
  check_sigma(sigma);
  int truncation = static_cast<int>(std::ceil(8.0 * sigma)) + 1;
  while (gaussian_tail_mass(k, sigma, truncation) >= kTailMassBound) {
    ++truncation;
  }
  return gaussian_truncated(k, sigma, truncation, window_start);
}

AmplitudeProfile normalize(std::span<const double> raw, int first_slot, Window window) {
  double sum = 0.0;
  for (double a : raw) {
    if (!(a >= 0.0) || !std::isfinite(a)) {
      throw std::invalid_argument("amplitudes must be finite and nonnegative");
    }
    sum += a * a;
  }
  if (!(sum > 0.0)) {
    throw std::invalid_argument("cannot normalize an all-zero amplitude sequence");
  }
  const double scale = 1.0 / std::sqrt(sum);
  std::vector<double> amplitudes(raw.begin(), raw.end());
  for (double& a : amplitudes) {
    a *= scale;
  }
  const int last = first_slot + static_cast<int>(raw.size()) - 1;
  const int truncation = std::max(window.start - first_slot, last - (window.end() - 1));
  return AmplitudeProfile(first_slot, std::move(amplitudes), window, truncation);
}

PhaseAssignment::PhaseAssignment(const AmplitudeProfile& profile,
                                 std::span<const std::uint8_t> known_phases,
                                 std::span<const std::uint8_t> padding_phases)
    : first_slot_(profile.first_slot()) {
  const Window& window = profile.window();
  const auto support = static_cast<std::size_t>(profile.last_slot() - profile.first_slot() + 1);
  if (known_phases.size() != static_cast<std::size_t>(window.length)) {
    throw std::invalid_argument("known phases must have one bit per window slot");
  }
  if (padding_phases.size() != support - known_phases.size()) {
    throw std::invalid_argument("padding phases must cover the support outside the window");
  }
  bits_.reserve(support);
  std::size_t pad = 0;
  for (int slot = profile.first_slot(); slot <= profile.last_slot(); ++slot) {
    const std::uint8_t b = window.contains(slot)
                               ? known_phases[static_cast<std::size_t>(slot - window.start)]
                               : padding_phases[pad++];
    bits_.push_back(b & 1U);
  }
  known_.assign(known_phases.begin(), known_phases.end());
  for (auto& b : known_) {
    b &= 1U;
  }
}

PhaseAssignment PhaseAssignment::zeros(const AmplitudeProfile& profile) {
  const auto support = static_cast<std::size_t>(profile.last_slot() - profile.first_slot() + 1);
  return PhaseAssignment(profile.first_slot(), std::vector<std::uint8_t>(support, 0),
                         std::vector<std::uint8_t>(static_cast<std::size_t>(profile.window().length), 0));
}

int PhaseAssignment::bit(int slot) const {
  if (slot < first_slot_ || slot >= first_slot_ + static_cast<int>(bits_.size())) {
    return 0;
  }
  return bits_[static_cast<std::size_t>(slot - first_slot_)];
}

}  // namespace dpsqkd
