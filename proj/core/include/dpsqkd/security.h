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

#ifndef DPSQKD_SECURITY_H_
#define DPSQKD_SECURITY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpsqkd/effective.h"
#include "dpsqkd/optimize.h"
#include "dpsqkd/params.h"

namespace dpsqkd {

inline constexpr int kMinSequentialLength = 2;
inline constexpr int kMaxSequentialLength = 20;

/// Optimized gaussian rows for k = 2..k_max, computed once and shared by
/// every feasibility check of a scan.
class AttackCatalog {
 public:
  explicit AttackCatalog(EffectiveErrorRule rule = kDefaultEffectiveErrorRule,
                         int k_max = kMaxSequentialLength);

  const OptimizedRow& row(int k) const;
  int k_min() const { return kMinSequentialLength; }
  int k_max() const { return k_min() + static_cast<int>(rows_.size()) - 1; }
  EffectiveErrorRule rule() const { return rule_; }

 private:
  EffectiveErrorRule rule_;
  std::vector<OptimizedRow> rows_;
};

/// Verdict on whether Eve can run the sequential attack with run length k.
struct FeasibilityReport {
  int k = 0;
  double p_click = 0.0;
  double p_seq = 0.0;
  double e_exp = 0.0;
  double sigma_star = 0.0;
  double error_rate = 0.0;
  double detection_rate = 0.0;
  double effective_error = 0.0;
  double r_star = 1.0;
  bool r_saturated = false;
  double kept_fraction = 0.0;  // reported only
  bool enough_sequential_events = false;  // r* p_click <= p_seq
  bool within_error_budget = false;       // r* E <= e_exp
  bool full_rate_events = false;          // p_click <= p_seq, the r = 1 check
  bool feasible = false;
  std::vector<std::string> reasons;
  std::vector<std::string> warnings;
};

FeasibilityReport feasible_sequential(const ExperimentParams& params, int k,
                                      const AttackCatalog& catalog);

/// Convenience overload that optimizes sigma for this k only.
FeasibilityReport feasible_sequential(const ExperimentParams& params, int k,
                                      EffectiveErrorRule rule = kDefaultEffectiveErrorRule);

/// Collision-probability bound 1 - e^2 - (1 - 6e)^2 / 2, taken as equality.
double collision_probability_bound(double e_exp);

/// Key rate against the photon-wise individual attack,
/// -p_click [(1 - 2 nbar) log2 P_C0 + H2(e_exp)].
/// Throws std::domain_error when the collision bound leaves (0, 1].
double individual_attack_rate(const ExperimentParams& params);

enum class AttackType { kIndividual, kSequential, kNone };

std::string_view to_string(AttackType type);

struct Classification {
  AttackType type = AttackType::kNone;
  std::optional<int> k;

  bool operator==(const Classification&) const = default;
};

/// Attack that breaks `setup` at photon number `nbar`: individual when its
/// key rate is not positive, otherwise the shortest feasible sequential
/// run, otherwise none.
Classification classify_nbar(const ExperimentParams& setup, double nbar,
                             const AttackCatalog& catalog);

struct NbarGrid {
  double min = 0.01;
  double max = 1.0;
  double step = 0.005;

  std::vector<double> points() const;
};

struct Region {
  double nbar_low = 0.0;
  double nbar_high = 0.0;
  AttackType type = AttackType::kNone;
  std::optional<int> k;
};

struct RegionTable {
  std::vector<Region> regions;
  // Some grid point was left unbroken.
  bool has_none = false;
};

inline constexpr double kBoundaryResolution = 1e-4;

/// Classifies every grid point (the photon number of `setup` is ignored),
/// merges equal neighbours into regions and refines each boundary by
/// bisection. Requires grid.step <= 0.005.
RegionTable scan_nbar(const ExperimentParams& setup, const NbarGrid& grid,
                      const AttackCatalog& catalog);

struct DistanceSearch {
  double max_km = 500.0;
  double tolerance_km = 0.01;
  NbarGrid grid;
};

struct DistanceResult {
  // Shortest length at which every grid photon number is broken; empty
  // when some photon number stays secure up to max_km.
  std::optional<double> onset_km;
  double searched_max_km = 0.0;
  RegionTable regions;  // scan at onset_km (or at max_km when unbounded)
};

/// Bisects the fiber length of `link` (its own length is ignored).
DistanceResult max_secure_distance(const LinkParams& link, double dark_count,
                                   double baseline_error, const AttackCatalog& catalog,
                                   const DistanceSearch& search = {});

}  // namespace dpsqkd

#endif  // DPSQKD_SECURITY_H_
