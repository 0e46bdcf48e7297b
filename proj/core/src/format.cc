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

#include "dpsqkd/format.h"

#include <cstdio>
#include <cstdlib>

namespace dpsqkd {

std::string format_probability(double value) {
  // %g already switches to exponent form below 1e-4.
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.*g", kReportSignificantDigits, value);
  return buffer;
}

double round_significant(double value) {
  return std::strtod(format_probability(value).c_str(), nullptr);
}

}  // namespace dpsqkd
