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

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli/run.h"

using dpsqkd::cli::Command;
using dpsqkd::cli::Format;
using dpsqkd::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Sequential-attack analysis for differential-phase-shift QKD"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string format_name;
  std::string rule_name = std::string(dpsqkd::to_string(config.effective_rule));
  std::string output_path;

  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output_path, "Write the document here instead of stdout");
  app.add_option("--effective-rule", rule_name,
                 "Effective-error equation: full-rate (tabulated convention) or exact root")
      ->check(CLI::IsMember({"full-rate", "exact"}));

  int k = 0;
  double sigma = 0.0;
  std::string config_path;

  auto* table1 = app.add_subcommand("table1", "Optimized gaussian rates per k");
  table1->add_option("--k-min", config.k_min, "Smallest k")->capture_default_str();
  table1->add_option("--k-max", config.k_max, "Largest k")->capture_default_str();

  auto* rates = app.add_subcommand("rates", "E, D and E_eff of one profile");
  rates->add_option("--k", k, "Known-phase window length")->required();
  rates->add_option("--sigma", sigma, "Gaussian width (optimized when omitted)");
  rates->add_flag("--rect", config.rectangular, "Use the flat profile");

  auto* dump = app.add_subcommand("profile-dump", "Slot/amplitude pairs of a profile");
  dump->add_option("--k", k, "Known-phase window length")->required();
  dump->add_option("--sigma", sigma, "Gaussian width");
  dump->add_flag("--rect", config.rectangular, "Use the flat profile");

  auto* check = app.add_subcommand("check", "Sequential-attack feasibility for a setup");
  check->add_option("--config", config_path, "Setup JSON")->required();
  check->add_option("--k", k, "Run length (all k = 2..20 when omitted)");

  auto* scan = app.add_subcommand("scan-nbar", "Attack regions over the photon number");
  scan->add_option("--config", config_path, "Setup JSON")->required();
  scan->add_option("--min", config.grid.min, "Smallest nbar")->capture_default_str();
  scan->add_option("--max", config.grid.max, "Largest nbar")->capture_default_str();
  scan->add_option("--step", config.grid.step, "Grid step")->capture_default_str();

  auto* distance = app.add_subcommand("max-distance", "Length at which every nbar is broken");
  distance->add_option("--config", config_path, "Setup JSON (length_km ignored)")->required();
  distance->add_option("--max-km", config.max_km, "Upper end of the search")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, Command> commands{
      {table1, Command::kTable1},   {rates, Command::kRates},
      {dump, Command::kProfileDump}, {check, Command::kCheck},
      {scan, Command::kScanNbar},   {distance, Command::kMaxDistance},
  };
  CLI::App* chosen = app.get_subcommands().front();
  config.command = commands.at(chosen);
  if (!format_name.empty()) {
    config.format = format_name == "csv" ? Format::kCsv : Format::kJson;
  }
  config.effective_rule = *dpsqkd::parse_effective_error_rule(rule_name);
  auto given = [chosen](const char* name) {
    const CLI::Option* option = chosen->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };
  if (given("--k")) {
    config.k = k;
  }
  if (given("--sigma")) {
    config.sigma = sigma;
  }
  if (!config_path.empty()) {
    config.config_path = config_path;
  }

  const dpsqkd::cli::RunResult result = dpsqkd::cli::run(config);
  if (result.exit_code != dpsqkd::cli::kExitOk) {
    std::cerr << result.diagnostic << '\n';
    return result.exit_code;
  }
  if (output_path.empty()) {
    std::cout << result.document;
  } else {
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output_path << '\n';
      return dpsqkd::cli::kExitConfigError;
    }
    out << result.document;
  }
  return dpsqkd::cli::kExitOk;
}
