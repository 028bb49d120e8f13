#pragma once

#include <utility>

#include "specint/types.hpp"

namespace specint {

// Raw counts from a two-arm trial: patients and events in the treatment
// and control groups.  All four cells (events and non-events in each arm)
// must be strictly positive, otherwise the Woolf variance is infinite.
class TwoByTwoTable {
 public:
  TwoByTwoTable(long n_t, long e_t, long n_c, long e_c);

  long n_t() const { return n_t_; }
  long e_t() const { return e_t_; }
  long n_c() const { return n_c_; }
  long e_c() const { return e_c_; }

 private:
  long n_t_, e_t_, n_c_, e_c_;
};

/// ln[(e_t/(n_t-e_t)) / (e_c/(n_c-e_c))].
double log_odds_ratio(const TwoByTwoTable& t);

/// Woolf approximation: sqrt(1/e_t + 1/(n_t-e_t) + 1/e_c + 1/(n_c-e_c)).
double woolf_se(const TwoByTwoTable& t);

/// The bridge into inference: N(log_odds_ratio, woolf_se^2).
NormalLikelihood likelihood(const TwoByTwoTable& t);

/// Two-sided normal interval exp(estimate +- z se), on the odds-ratio scale.
std::pair<double, double> wald_ci(const NormalLikelihood& lik, double level);

}  // namespace specint
