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

#ifndef DPSQKD_TOOLS_CLI_RUN_H_
#define DPSQKD_TOOLS_CLI_RUN_H_

#include <optional>
#include <string>

#include "dpsqkd/effective.h"
#include "dpsqkd/security.h"

namespace dpsqkd::cli {

enum class Command { kTable1, kRates, kProfileDump, kCheck, kScanNbar, kMaxDistance };
enum class Format { kCsv, kJson };

// Exit codes. Verdicts never change the exit code.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitInvalidParameters = 3;

struct RunConfig {
  Command command = Command::kTable1;
  std::optional<Format> format;  // per-command default when unset
  std::optional<std::string> config_path;
  std::optional<std::string> output_path;
  EffectiveErrorRule effective_rule = kDefaultEffectiveErrorRule;

  // table1
  int k_min = 4;
  int k_max = 10;
  // rates, profile-dump, check
  std::optional<int> k;
  std::optional<double> sigma;
  bool rectangular = false;
  // scan-nbar, max-distance
  NbarGrid grid;
  double max_km = 500.0;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string document;    // empty on failure
  std::string diagnostic;  // empty on success
};

Format default_format(Command command);

/// Executes one subcommand and renders its document. Never throws; every
/// failure is reported through exit_code and diagnostic.
RunResult run(const RunConfig& config);

}  // namespace dpsqkd::cli

#endif  // DPSQKD_TOOLS_CLI_RUN_H_
