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

#ifndef DPSQKD_SETUP_JSON_H_
#define DPSQKD_SETUP_JSON_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dpsqkd/params.h"

namespace dpsqkd {

/// Malformed setup document. `key()` names the offending key, or is empty
/// when the document as a whole is unreadable.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : "config key '" + key + "': " + message),
        key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Raw contents of a setup JSON document. Recognised keys:
///   nbar, T, fiber_db_per_km, length_km, interferometer_db,
///   detector_efficiency, dark_count, mu, qber, pulse_count.
/// Anything else is rejected.
struct SetupDocument {
  std::optional<double> nbar;
  std::optional<double> transmission;
  std::optional<double> fiber_db_per_km;
  std::optional<double> length_km;
  std::optional<double> interferometer_db;
  std::optional<double> detector_efficiency;
  std::optional<double> dark_count;
  std::optional<double> mu;
  std::optional<double> qber;
  std::optional<std::uint64_t> pulse_count;

  bool has_link() const;
};

SetupDocument parse_setup(std::string_view json_text);
SetupDocument load_setup(const std::filesystem::path& path);

/// Full parameter set; needs nbar, dark_count, mu or qber, and T or the
/// link breakdown. Throws ConfigError for missing keys and
/// std::invalid_argument for violated invariants.
ExperimentParams to_experiment_params(const SetupDocument& doc);

/// Like to_experiment_params but without a photon number (scans supply it).
ExperimentParams to_scan_setup(const SetupDocument& doc);

/// Link breakdown; length_km is optional when `require_length` is false.
LinkParams to_link_params(const SetupDocument& doc, bool require_length = true);

}  // namespace dpsqkd

#endif  // DPSQKD_SETUP_JSON_H_
