#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specint {

struct StudyEffect {
  std::string label;
  double estimate;  // log odds ratio
  double se;        // > 0
};

struct RandomEffectsResult {
  double pooled;     // log odds ratio
  double pooled_se;
  double tau2;       // between-study variance, >= 0
  double q_stat;     // heterogeneity statistic
  std::pair<double, double> ci;  // odds-ratio scale
};

/// DerSimonian-Laird random-effects combination.  Fixed-effect weights
/// 1/se^2 give the moment estimate tau2 = max(0, (Q - (k-1)) / (S1 - S2/S1));
/// the pooled estimate then uses weights 1/(se^2 + tau2).  A single study
/// pools to itself with tau2 = 0.
RandomEffectsResult dersimonian_laird(std::span<const StudyEffect> studies,
                                      double level);

struct ForestRow {
  std::string label;
  double odds_ratio;
  double lo;
  double hi;
};

/// One row per study, in the given order, with Wald intervals at `level`;
/// the combined result is appended with the label "Combined".
std::vector<ForestRow> forest_rows(std::span<const StudyEffect> studies,
                                   const RandomEffectsResult& combined,
                                   double level);

}  // namespace specint
