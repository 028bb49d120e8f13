#include "specint/effects.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "specint/errors.hpp"
#include "specint/normal.hpp"

namespace specint {

TwoByTwoTable::TwoByTwoTable(long n_t, long e_t, long n_c, long e_c)
    : n_t_(n_t), e_t_(e_t), n_c_(n_c), e_c_(e_c) {
  if (n_t <= 0 || n_c <= 0)
    throw std::invalid_argument("TwoByTwoTable: group sizes must be positive");
  if (e_t <= 0 || e_t >= n_t || e_c <= 0 || e_c >= n_c)
    throw DegenerateTableError(
        "TwoByTwoTable: every cell must be strictly positive (events "
        + std::to_string(e_t) + "/" + std::to_string(n_t) + ", "
        + std::to_string(e_c) + "/" + std::to_string(n_c) + ")");
}

double log_odds_ratio(const TwoByTwoTable& t) {
  const double odds_t =
      static_cast<double>(t.e_t()) / static_cast<double>(t.n_t() - t.e_t());
  const double odds_c =
      static_cast<double>(t.e_c()) / static_cast<double>(t.n_c() - t.e_c());
  // Difference of logs so swapping the arms negates the result exactly.
  return std::log(odds_t) - std::log(odds_c);
}

double woolf_se(const TwoByTwoTable& t) {
  const double var = 1.0 / static_cast<double>(t.e_t()) +
                     1.0 / static_cast<double>(t.n_t() - t.e_t()) +
                     1.0 / static_cast<double>(t.e_c()) +
                     1.0 / static_cast<double>(t.n_c() - t.e_c());
  return std::sqrt(var);
}

NormalLikelihood likelihood(const TwoByTwoTable& t) {
  return NormalLikelihood(log_odds_ratio(t), woolf_se(t));
}

std::pair<double, double> wald_ci(const NormalLikelihood& lik, double level) {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("wald_ci: level not in (0, 1)");
  const double z = std_normal_quantile(1.0 - 0.5 * (1.0 - level));
  return {std::exp(lik.estimate() - z * lik.se()),
          std::exp(lik.estimate() + z * lik.se())};
}

}  // namespace specint
