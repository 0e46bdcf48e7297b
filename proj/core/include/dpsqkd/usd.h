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

#ifndef DPSQKD_USD_H_
#define DPSQKD_USD_H_

namespace dpsqkd {

// Eve's unambiguous-state-discrimination statistics on Alice's pulse train.

struct SequentialEvent {
  int length = 1;     // k
  double rate = 0.0;  // probability per pulse position
};

/// Per-pulse USD success probability 1 - exp(-2 nbar).
double p_usd(double nbar);

/// Probability per pulse position of a success run of length k or longer:
/// (1 - p_usd) * p_usd^k.
double p_seq(int k, double nbar);

SequentialEvent sequential_event(int k, double nbar);

/// Fraction of pulses Eve forwards untouched, (1 - r) p_click / nbar.
/// Reported only; it never enters key-length accounting.
double kept_fraction(double r, double p_click, double nbar);

}  // namespace dpsqkd

#endif  // DPSQKD_USD_H_
