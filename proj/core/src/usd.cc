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

#include "dpsqkd/usd.h"

#include <cmath>
#include <stdexcept>

namespace dpsqkd {

double p_usd(double nbar) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("nbar must be >= 0");
  }
  return -std::expm1(-2.0 * nbar);
}

double p_seq(int k, double nbar) {
  if (k < 1) {
    throw std::invalid_argument("sequential run length k must be >= 1");
  }
  const double success = p_usd(nbar);
  return std::exp(-2.0 * nbar) * std::pow(success, k);
}

SequentialEvent sequential_event(int k, double nbar) { return {k, p_seq(k, nbar)}; }

double kept_fraction(double r, double p_click, double nbar) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw std::invalid_argument("attack ratio r must lie in (0, 1]");
  }
  if (!(nbar > 0.0)) {
    throw std::invalid_argument("nbar must be > 0");
  }
  return (1.0 - r) * p_click / nbar;
}

}  // namespace dpsqkd
