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

namespace dpsqkd {
namespace {

void require(bool condition, const char* message) {
  if (!condition) {
    throw std::invalid_argument(message);
  }
}

double db_to_linear(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

}  // namespace

void LinkParams::validate() const {
  require(std::isfinite(fiber_db_per_km) && fiber_db_per_km >= 0.0,
          "fiber_db_per_km must be >= 0");
  require(std::isfinite(length_km) && length_km >= 0.0, "length_km must be >= 0");
  require(std::isfinite(interferometer_db) && interferometer_db >= 0.0,
          "interferometer_db must be >= 0");
  require(detector_efficiency > 0.0 && detector_efficiency <= 1.0,
          "detector_efficiency must lie in (0, 1]");
}

void ExperimentParams::validate() const {
  require(std::isfinite(mean_photon_number) && mean_photon_number > 0.0,
          "nbar must be > 0");
  if (transmission) {
    require(*transmission >= 0.0 && *transmission <= 1.0, "T must lie in [0, 1]");
  } else {
    require(link.has_value(), "either T or a fiber/detector breakdown is required");
  }
  if (link) {
    link->validate();
  }
  require(dark_count >= 0.0 && dark_count < 1.0, "dark_count must lie in [0, 1)");
  require(baseline_error >= 0.0 && baseline_error < 0.5, "mu must lie in [0, 0.5)");
  if (measured_qber) {
    require(*measured_qber >= 0.0 && *measured_qber <= 0.5, "qber must lie in [0, 0.5]");
  }
}

std::vector<std::string> ExperimentParams::warnings() const {
  std::vector<std::string> result;
  if (transmission && link) {
    result.emplace_back("both T and a link breakdown were given; using T directly");
  }
  return result;
}

double transmission(const LinkParams& link) {
  link.validate();
  return db_to_linear(link.interferometer_db) * link.detector_efficiency *
         db_to_linear(link.fiber_db_per_km * link.length_km);
}

double resolved_transmission(const ExperimentParams& params) {
  if (params.transmission) {
    return *params.transmission;
  }
  if (!params.link) {
    throw std::invalid_argument("either T or a fiber/detector breakdown is required");
  }
  return transmission(*params.link);
}

double p_click(const ExperimentParams& params) {
  params.validate();
  const double click =
      resolved_transmission(params) * params.mean_photon_number + params.dark_count;
  if (click > 1.0) {
    throw std::domain_error("p_click = T*nbar + d exceeds 1 (nonphysical parameters)");
  }
  return click;
}

double e_exp(const ExperimentParams& params) {
  const double click = p_click(params);
  if (params.measured_qber) {
    return *params.measured_qber;
  }
  if (click == 0.0) {
    throw std::domain_error("QBER undefined: p_click is zero");
  }
  return (params.baseline_error * click + params.dark_count / 2.0) / click;
}

}  // namespace dpsqkd
