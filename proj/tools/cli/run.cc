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

#include "cli/run.h"

#include <sstream>
#include <stdexcept>

#include "dpsqkd/attack.h"
#include "dpsqkd/format.h"
#include "dpsqkd/optimize.h"
#include "dpsqkd/profile.h"
#include "dpsqkd/setup_json.h"
#include "json.hpp"

namespace dpsqkd::cli {
namespace {

using Json = nlohmann::ordered_json;

// Numbers go through round_significant so JSON and CSV show the same digits.
Json num(double value) { return round_significant(value); }

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

SetupDocument setup_from(const RunConfig& config) {
  if (!config.config_path) {
    throw ConfigError("--config", "a setup file is required for this command");
  }
  return load_setup(*config.config_path);
}

std::string rule_name(EffectiveErrorRule rule) { return std::string(to_string(rule)); }

// table1 --------------------------------------------------------------------

std::string table1(const RunConfig& config, Format format) {
  const std::vector<OptimizedRow> rows =
      optimize_table(config.k_min, config.k_max, config.effective_rule);
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "k,sigma,E,D,E_eff\n";
    for (const OptimizedRow& row : rows) {
      out << row.k << ',' << format_probability(row.sigma_star) << ','
          << format_probability(row.error_rate) << ',' << format_probability(row.detection_rate)
          << ',' << format_probability(row.effective.effective_error) << '\n';
    }
    return out.str();
  }
  Json doc;
  doc["effective_rule"] = rule_name(config.effective_rule);
  doc["rows"] = Json::array();
  for (const OptimizedRow& row : rows) {
    Json entry;
    entry["k"] = row.k;
    entry["sigma"] = num(row.sigma_star);
    entry["E"] = num(row.error_rate);
    entry["D"] = num(row.detection_rate);
    entry["r_star"] = num(row.effective.r_star);
    entry["E_eff"] = num(row.effective.effective_error);
    doc["rows"].push_back(entry);
  }
  return render(doc);
}

// rates / profile-dump ------------------------------------------------------

int required_k(const RunConfig& config) {
  if (!config.k) {
    throw ConfigError("--k", "required for this command");
  }
  return *config.k;
}

AmplitudeProfile build_profile(const RunConfig& config, double* sigma_used) {
  const int k = required_k(config);
  if (config.rectangular) {
    return rectangular(k);
  }
  double sigma = 0.0;
  if (config.sigma) {
    sigma = *config.sigma;
  } else {
    sigma = optimize_sigma(k, config.effective_rule).sigma_star;
  }
  *sigma_used = sigma;
  return gaussian(k, sigma);
}

std::string rates(const RunConfig& config, Format format) {
  double sigma = 0.0;
  const AmplitudeProfile profile = build_profile(config, &sigma);
  const double e = error_rate(profile);
  const double d = detection_rate(profile);
  const EffectiveErrorSolution eff = effective_error(e, d, config.effective_rule);
  const int k = profile.window().length;
  const char* shape = config.rectangular ? "rectangular" : "gaussian";

  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "k,profile,sigma,E,D,r_star,E_eff\n"
        << k << ',' << shape << ',' << (config.rectangular ? "" : format_probability(sigma))
        << ',' << format_probability(e) << ',' << format_probability(d) << ','
        << format_probability(eff.r_star) << ',' << format_probability(eff.effective_error)
        << '\n';
    return out.str();
  }
  Json doc;
  doc["k"] = k;
  doc["profile"] = shape;
  if (!config.rectangular) {
    doc["sigma"] = num(sigma);
  }
  doc["truncation"] = profile.truncation();
  doc["E"] = num(e);
  doc["D"] = num(d);
  doc["effective_rule"] = rule_name(config.effective_rule);
  doc["r_star"] = num(eff.r_star);
  doc["r_saturated"] = eff.saturated;
  doc["E_eff"] = num(eff.effective_error);
  return render(doc);
}

std::string profile_dump(const RunConfig& config, Format format) {
  if (!config.rectangular && !config.sigma) {
    throw ConfigError("--sigma", "required for profile-dump of a gaussian profile");
  }
  double sigma = 0.0;
  const AmplitudeProfile profile = build_profile(config, &sigma);
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "slot,amplitude\n";
    for (int slot = profile.first_slot(); slot <= profile.last_slot(); ++slot) {
      out << slot << ',' << format_probability(profile.at(slot)) << '\n';
    }
    return out.str();
  }
  Json doc;
  doc["k"] = profile.window().length;
  doc["window_start"] = profile.window().start;
  doc["truncation"] = profile.truncation();
  if (const auto& shape = profile.gaussian_shape()) {
    doc["sigma"] = num(shape->sigma);
    doc["center"] = num(shape->center);
    doc["norm_constant"] = num(shape->norm_constant);
  }
  doc["slots"] = Json::array();
  for (int slot = profile.first_slot(); slot <= profile.last_slot(); ++slot) {
    doc["slots"].push_back(Json{{"slot", slot}, {"amplitude", num(profile.at(slot))}});
  }
  return render(doc);
}

// check ---------------------------------------------------------------------

Json report_json(const FeasibilityReport& r) {
  Json doc;
  doc["k"] = r.k;
  doc["feasible"] = r.feasible;
  doc["p_click"] = num(r.p_click);
  doc["p_seq"] = num(r.p_seq);
  doc["e_exp"] = num(r.e_exp);
  doc["sigma"] = num(r.sigma_star);
  doc["E"] = num(r.error_rate);
  doc["D"] = num(r.detection_rate);
  doc["r_star"] = num(r.r_star);
  doc["E_eff"] = num(r.effective_error);
  doc["kept_fraction"] = num(r.kept_fraction);
  doc["enough_sequential_events"] = r.enough_sequential_events;
  doc["within_error_budget"] = r.within_error_budget;
  doc["full_rate_events"] = r.full_rate_events;
  doc["reasons"] = r.reasons;
  doc["warnings"] = r.warnings;
  return doc;
}

const char* kReportCsvHeader =
    "k,feasible,p_click,p_seq,e_exp,sigma,E,D,r_star,E_eff,kept_fraction\n";

void report_csv(std::ostream& out, const FeasibilityReport& r) {
  out << r.k << ',' << (r.feasible ? "true" : "false") << ',' << format_probability(r.p_click)
      << ',' << format_probability(r.p_seq) << ',' << format_probability(r.e_exp) << ','
      << format_probability(r.sigma_star) << ',' << format_probability(r.error_rate) << ','
      << format_probability(r.detection_rate) << ',' << format_probability(r.r_star) << ','
      << format_probability(r.effective_error) << ',' << format_probability(r.kept_fraction)
      << '\n';
}

std::string check(const RunConfig& config, Format format) {
  const ExperimentParams params = to_experiment_params(setup_from(config));
  std::vector<FeasibilityReport> reports;
  if (config.k) {
    reports.push_back(feasible_sequential(params, *config.k, config.effective_rule));
  } else {
    const AttackCatalog catalog(config.effective_rule);
    for (int k = catalog.k_min(); k <= catalog.k_max(); ++k) {
      reports.push_back(feasible_sequential(params, k, catalog));
    }
  }
  if (format == Format::kCsv) {
    std::ostringstream out;
    out << kReportCsvHeader;
    for (const auto& r : reports) {
      report_csv(out, r);
    }
    return out.str();
  }
  if (config.k) {
    Json doc = report_json(reports.front());
    doc["effective_rule"] = rule_name(config.effective_rule);
    return render(doc);
  }
  Json doc;
  doc["effective_rule"] = rule_name(config.effective_rule);
  doc["smallest_feasible_k"] = nullptr;
  for (const auto& r : reports) {
    if (r.feasible) {
      doc["smallest_feasible_k"] = r.k;
      break;
    }
  }
  doc["reports"] = Json::array();
  for (const auto& r : reports) {
    doc["reports"].push_back(report_json(r));
  }
  return render(doc);
}

// scan-nbar / max-distance --------------------------------------------------

Json regions_json(const RegionTable& table) {
  Json regions = Json::array();
  for (const Region& region : table.regions) {
    Json entry;
    entry["nbar_low"] = num(region.nbar_low);
    entry["nbar_high"] = num(region.nbar_high);
    entry["attack"] = std::string(to_string(region.type));
    entry["k"] = region.k ? Json(*region.k) : Json(nullptr);
    regions.push_back(entry);
  }
  return regions;
}

void regions_csv(std::ostream& out, const RegionTable& table) {
  out << "nbar_low,nbar_high,attack,k\n";
  for (const Region& region : table.regions) {
    out << format_probability(region.nbar_low) << ',' << format_probability(region.nbar_high)
        << ',' << to_string(region.type) << ',' << (region.k ? std::to_string(*region.k) : "")
        << '\n';
  }
}

std::string scan(const RunConfig& config, Format format) {
  const ExperimentParams setup = to_scan_setup(setup_from(config));
  const AttackCatalog catalog(config.effective_rule);
  const RegionTable table = scan_nbar(setup, config.grid, catalog);
  if (format == Format::kCsv) {
    std::ostringstream out;
    regions_csv(out, table);
    return out.str();
  }
  Json doc;
  doc["effective_rule"] = rule_name(config.effective_rule);
  doc["grid"] = Json{{"min", num(config.grid.min)},
                     {"max", num(config.grid.max)},
                     {"step", num(config.grid.step)}};
  doc["has_none"] = table.has_none;
  doc["regions"] = regions_json(table);
  return render(doc);
}

std::string max_distance(const RunConfig& config, Format format) {
  const SetupDocument doc_in = setup_from(config);
  const LinkParams link = to_link_params(doc_in, /*require_length=*/false);
  const ExperimentParams template_params = to_scan_setup(doc_in);
  if (template_params.measured_qber) {
    throw ConfigError("qber", "max-distance derives the QBER from mu; remove qber");
  }
  const AttackCatalog catalog(config.effective_rule);
  DistanceSearch search;
  search.max_km = config.max_km;
  search.grid = config.grid;
  const DistanceResult result = max_secure_distance(
      link, template_params.dark_count, template_params.baseline_error, catalog, search);

  if (format == Format::kCsv) {
    std::ostringstream out;
    out << "onset_km," << (result.onset_km ? format_probability(*result.onset_km) : "") << '\n';
    regions_csv(out, result.regions);
    return out.str();
  }
  Json doc;
  doc["effective_rule"] = rule_name(config.effective_rule);
  doc["onset_km"] = result.onset_km ? num(*result.onset_km) : Json(nullptr);
  doc["searched_max_km"] = num(result.searched_max_km);
  doc["regions"] = regions_json(result.regions);
  return render(doc);
}

}  // namespace

Format default_format(Command command) {
  switch (command) {
    case Command::kTable1:
    case Command::kProfileDump:
    case Command::kScanNbar:
      return Format::kCsv;
    case Command::kRates:
    case Command::kCheck:
    case Command::kMaxDistance:
      return Format::kJson;
  }
  return Format::kJson;
}

RunResult run(const RunConfig& config) {
  const Format format = config.format.value_or(default_format(config.command));
  RunResult result;
  try {
    switch (config.command) {
      case Command::kTable1:
        result.document = table1(config, format);
        break;
      case Command::kRates:
        result.document = rates(config, format);
        break;
      case Command::kProfileDump:
        result.document = profile_dump(config, format);
        break;
      case Command::kCheck:
        result.document = check(config, format);
        break;
      case Command::kScanNbar:
        result.document = scan(config, format);
        break;
      case Command::kMaxDistance:
        result.document = max_distance(config, format);
        break;
    }
  } catch (const ConfigError& e) {
    result = {kExitConfigError, "", std::string("error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    result = {kExitInvalidParameters, "", std::string("error: invalid parameters: ") + e.what()};
  } catch (const std::domain_error& e) {
    result = {kExitInvalidParameters, "", std::string("error: nonphysical parameters: ") + e.what()};
  } catch (const std::exception& e) {
    result = {kExitInvalidParameters, "", std::string("error: ") + e.what()};
  }
  return result;
}

}  // namespace dpsqkd::cli
