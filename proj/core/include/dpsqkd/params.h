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

#ifndef DPSQKD_PARAMS_H_
#define DPSQKD_PARAMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpsqkd {

/// Component breakdown of Bob's end-to-end transmission: fiber, the
/// Mach-Zehnder interferometer and the detector.
struct LinkParams {
  double fiber_db_per_km = 0.2;
  double length_km = 0.0;
  double interferometer_db = 0.0;  // loss, positive dB
  double detector_efficiency = 1.0;

  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
};

/// Source, channel and detector parameters of one DPS-QKD run.
///
/// The transmission may be given directly or derived from `link`. When both
/// are present the direct value wins and `warnings()` says so.
struct ExperimentParams {
  double mean_photon_number = 0.0;
  std::optional<double> transmission;
  std::optional<LinkParams> link;
  double dark_count = 0.0;
  double baseline_error = 0.0;
  // Measured QBER without Eve. When set it replaces the baseline formula.
  std::optional<double> measured_qber;
  std::optional<std::uint64_t> pulse_count;

  void validate() const;
  std::vector<std::string> warnings() const;
};

/// eta_int * eta_det * 10^(-alpha L / 10), with eta_int = 10^(-loss_dB / 10).
double transmission(const LinkParams& link);

/// Transmission actually used for `params` (direct value preferred).
double resolved_transmission(const ExperimentParams& params);

/// Signal plus dark-count detection probability T*nbar + d.
/// Throws std::domain_error when the result exceeds one.
double p_click(const ExperimentParams& params);

/// QBER in the absence of Eve: (mu * p_click + d/2) / p_click, or the
/// measured value when one was supplied.
/// Throws std::domain_error when p_click is zero.
double e_exp(const ExperimentParams& params);

}  // namespace dpsqkd

#endif  // DPSQKD_PARAMS_H_
