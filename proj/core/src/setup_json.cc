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

#include "dpsqkd/setup_json.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dpsqkd {
namespace {

using nlohmann::json;

double number_at(const json& value, const std::string& key) {
  if (!value.is_number()) {
    throw ConfigError(key, "expected a number");
  }
  return value.get<double>();
}

template <typename T>
const T& required(const std::optional<T>& field, const char* key) {
  if (!field) {
    throw ConfigError(key, "required but missing");
  }
  return *field;
}

}  // namespace

bool SetupDocument::has_link() const {
  return fiber_db_per_km || length_km || interferometer_db || detector_efficiency;
}

SetupDocument parse_setup(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("setup document is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("", "setup document must be a JSON object");
  }
  SetupDocument doc;
  for (const auto& [key, value] : root.items()) {
    if (key == "nbar") {
      doc.nbar = number_at(value, key);
    } else if (key == "T") {
      doc.transmission = number_at(value, key);
    } else if (key == "fiber_db_per_km") {
      doc.fiber_db_per_km = number_at(value, key);
    } else if (key == "length_km") {
      doc.length_km = number_at(value, key);
    } else if (key == "interferometer_db") {
      doc.interferometer_db = number_at(value, key);
    } else if (key == "detector_efficiency") {
      doc.detector_efficiency = number_at(value, key);
    } else if (key == "dark_count") {
      doc.dark_count = number_at(value, key);
    } else if (key == "mu") {
      doc.mu = number_at(value, key);
    } else if (key == "qber") {
      doc.qber = number_at(value, key);
    } else if (key == "pulse_count") {
      if (!value.is_number_unsigned()) {
        throw ConfigError(key, "expected a nonnegative integer");
      }
      doc.pulse_count = value.get<std::uint64_t>();
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return doc;
}

SetupDocument load_setup(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("", "cannot open setup file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_setup(text.str());
}

LinkParams to_link_params(const SetupDocument& doc, bool require_length) {
  LinkParams link;
  link.fiber_db_per_km = required(doc.fiber_db_per_km, "fiber_db_per_km");
  link.interferometer_db = required(doc.interferometer_db, "interferometer_db");
  link.detector_efficiency = required(doc.detector_efficiency, "detector_efficiency");
  link.length_km = require_length ? required(doc.length_km, "length_km") : doc.length_km.value_or(0.0);
  link.validate();
  return link;
}

ExperimentParams to_scan_setup(const SetupDocument& doc) {
  ExperimentParams params;
  params.mean_photon_number = doc.nbar.value_or(1.0);
  params.transmission = doc.transmission;
  if (doc.has_link()) {
    params.link = to_link_params(doc);
  } else if (!doc.transmission) {
    throw ConfigError("T", "required unless the fiber/detector breakdown is given");
  }
  params.dark_count = required(doc.dark_count, "dark_count");
  params.measured_qber = doc.qber;
  if (doc.qber) {
    params.baseline_error = doc.mu.value_or(0.0);
  } else {
    params.baseline_error = required(doc.mu, "mu");
  }
  params.pulse_count = doc.pulse_count;
  params.validate();
  return params;
}

ExperimentParams to_experiment_params(const SetupDocument& doc) {
  required(doc.nbar, "nbar");
  return to_scan_setup(doc);
}

}  // namespace dpsqkd
