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

#include "dpsqkd/security.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dpsqkd/format.h"
#include "dpsqkd/usd.h"

namespace dpsqkd {

AttackCatalog::AttackCatalog(EffectiveErrorRule rule, int k_max) : rule_(rule) {
  if (k_max < kMinSequentialLength) {
    throw std::invalid_argument("catalog needs k_max >= 2");
  }
  rows_ = optimize_table(kMinSequentialLength, k_max, rule);
}

const OptimizedRow& AttackCatalog::row(int k) const {
  if (k < k_min() || k > k_max()) {
    throw std::out_of_range("run length k outside the attack catalog");
  }
  return rows_[static_cast<std::size_t>(k - k_min())];
}

namespace {

FeasibilityReport evaluate(const ExperimentParams& params, const OptimizedRow& row) {
  FeasibilityReport report;
  report.k = row.k;
  report.p_click = p_click(params);
  report.e_exp = e_exp(params);
  report.p_seq = p_seq(row.k, params.mean_photon_number);
  report.sigma_star = row.sigma_star;
  report.error_rate = row.error_rate;
  report.detection_rate = row.detection_rate;
  report.effective_error = row.effective.effective_error;
  report.r_star = row.effective.r_star;
  report.r_saturated = row.effective.saturated;
  report.kept_fraction = kept_fraction(report.r_star, report.p_click, params.mean_photon_number);

  report.enough_sequential_events = report.r_star * report.p_click <= report.p_seq;
  report.within_error_budget = report.effective_error <= report.e_exp;
  report.full_rate_events = report.p_click <= report.p_seq;
  report.feasible = report.enough_sequential_events && report.within_error_budget;

  auto verdict = [](bool ok) { return ok ? "holds" : "fails"; };
  report.reasons.push_back("sequential events: r* p_click = " +
                           format_probability(report.r_star * report.p_click) +
                           " <= p_seq(k) = " + format_probability(report.p_seq) + " " +
                           verdict(report.enough_sequential_events));
  report.reasons.push_back("error budget: E_eff = " + format_probability(report.effective_error) +
                           " <= e_exp = " + format_probability(report.e_exp) + " " +
                           verdict(report.within_error_budget));
  report.reasons.push_back("full-rate events: p_click = " + format_probability(report.p_click) +
                           " <= p_seq(k) = " + format_probability(report.p_seq) + " " +
                           verdict(report.full_rate_events));
  report.warnings = params.warnings();
  return report;
}

void check_length(int k) {
  if (k < kMinSequentialLength) {
    throw std::invalid_argument("sequential attack needs k >= 2");
  }
}

}  // namespace

FeasibilityReport feasible_sequential(const ExperimentParams& params, int k,
                                      const AttackCatalog& catalog) {
  check_length(k);
  params.validate();
  return evaluate(params, catalog.row(k));
}

FeasibilityReport feasible_sequential(const ExperimentParams& params, int k,
                                      EffectiveErrorRule rule) {
  check_length(k);
  params.validate();
  return evaluate(params, optimize_sigma(k, rule));
}

double collision_probability_bound(double e) {
  const double linear = 1.0 - 6.0 * e;
  return 1.0 - e * e - 0.5 * linear * linear;
}

double individual_attack_rate(const ExperimentParams& params) {
  const double click = p_click(params);
  const double qber = e_exp(params);
  const double collision = collision_probability_bound(qber);
  if (!(collision > 0.0 && collision <= 1.0)) {
    throw std::domain_error("QBER outside the individual-attack model: P_C0 bound not in (0, 1]");
  }
  return -click * ((1.0 - 2.0 * params.mean_photon_number) * std::log2(collision) +
                   binary_entropy(qber));
}

std::string_view to_string(AttackType type) {
  switch (type) {
    case AttackType::kIndividual:
      return "individual";
    case AttackType::kSequential:
      return "sequential";
    case AttackType::kNone:
      return "none";
  }
  return "none";
}

Classification classify_nbar(const ExperimentParams& setup, double nbar,
                             const AttackCatalog& catalog) {
  ExperimentParams params = setup;
  params.mean_photon_number = nbar;
  params.validate();

  bool individual_breaks = false;
  try {
    individual_breaks = individual_attack_rate(params) <= 0.0;
  } catch (const std::domain_error&) {
    // QBER so high that the individual-attack bound is meaningless; no key.
    individual_breaks = true;
  }
  if (individual_breaks) {
    return {AttackType::kIndividual, std::nullopt};
  }
  for (int k = catalog.k_min(); k <= catalog.k_max(); ++k) {
    if (evaluate(params, catalog.row(k)).feasible) {
      return {AttackType::kSequential, k};
    }
  }
  return {AttackType::kNone, std::nullopt};
}

std::vector<double> NbarGrid::points() const {
  if (!(min > 0.0 && max >= min && step > 0.0)) {
    throw std::invalid_argument("nbar grid needs 0 < min <= max and step > 0");
  }
  const auto count = static_cast<int>(std::floor((max - min) / step + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count + 1));
  for (int j = 0; j <= count; ++j) {
    out.push_back(min + j * step);
  }
  return out;
}

RegionTable scan_nbar(const ExperimentParams& setup, const NbarGrid& grid,
                      const AttackCatalog& catalog) {
  if (grid.step > 0.005 + 1e-12) {
    throw std::invalid_argument("nbar grid step must be <= 0.005");
  }
  const std::vector<double> points = grid.points();
  std::vector<Classification> marks;
  marks.reserve(points.size());
  for (double nbar : points) {
    marks.push_back(classify_nbar(setup, nbar, catalog));
  }

  RegionTable table;
  Region current{points.front(), points.front(), marks.front().type, marks.front().k};
  for (std::size_t j = 1; j < points.size(); ++j) {
    if (marks[j] == marks[j - 1]) {
      continue;
    }
    double lo = points[j - 1];
    double hi = points[j];
    while (hi - lo > kBoundaryResolution) {
      const double mid = 0.5 * (lo + hi);
      if (classify_nbar(setup, mid, catalog) == marks[j - 1]) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double boundary = 0.5 * (lo + hi);
    current.nbar_high = boundary;
    table.regions.push_back(current);
    current = Region{boundary, boundary, marks[j].type, marks[j].k};
  }
  current.nbar_high = points.back();
  table.regions.push_back(current);

  for (const Classification& mark : marks) {
    if (mark.type == AttackType::kNone) {
      table.has_none = true;
    }
  }
  return table;
}

DistanceResult max_secure_distance(const LinkParams& link, double dark_count,
                                   double baseline_error, const AttackCatalog& catalog,
                                   const DistanceSearch& search) {
  if (!(search.max_km > 0.0 && search.tolerance_km > 0.0)) {
    throw std::invalid_argument("distance search needs max_km > 0 and tolerance_km > 0");
  }
  auto scan_at = [&](double length_km) {
    LinkParams at = link;
    at.length_km = length_km;
    ExperimentParams setup;
    setup.mean_photon_number = search.grid.min;
    setup.link = at;
    setup.dark_count = dark_count;
    setup.baseline_error = baseline_error;
    return scan_nbar(setup, search.grid, catalog);
  };

  DistanceResult result;
  result.searched_max_km = search.max_km;
  RegionTable at_zero = scan_at(0.0);
  if (!at_zero.has_none) {
    result.onset_km = 0.0;
    result.regions = std::move(at_zero);
    return result;
  }
  RegionTable at_max = scan_at(search.max_km);
  if (at_max.has_none) {
    result.regions = std::move(at_max);
    return result;
  }
  // Invariant: a secure photon number exists at lo, none at hi.
  double lo = 0.0;
  double hi = search.max_km;
  RegionTable at_hi = std::move(at_max);
  while (hi - lo > search.tolerance_km) {
    const double mid = 0.5 * (lo + hi);
    RegionTable table = scan_at(mid);
    if (table.has_none) {
      lo = mid;
    } else {
      hi = mid;
      at_hi = std::move(table);
    }
  }
  result.onset_km = hi;
  result.regions = std::move(at_hi);
  return result;
}

}  // namespace dpsqkd
