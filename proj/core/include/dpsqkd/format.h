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

#ifndef DPSQKD_FORMAT_H_
#define DPSQKD_FORMAT_H_

#include <string>

namespace dpsqkd {

inline constexpr int kReportSignificantDigits = 6;

/// Six significant digits; scientific notation below 1e-4.
std::string format_probability(double value);

/// `value` rounded to six significant digits, so that shortest round-trip
/// printing reproduces format_probability's digits.
double round_significant(double value);

}  // namespace dpsqkd

#endif  // DPSQKD_FORMAT_H_
