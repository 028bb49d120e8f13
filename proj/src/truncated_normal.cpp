#include "specint/truncated_normal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specint/normal.hpp"

namespace specint {

TruncatedNormal::TruncatedNormal(double mean, double sd, double lower,
                                 double upper)
    : mean_(mean),
      sd_(sd),
      lower_(lower),
      upper_(upper),
      mass_(normal_interval_mass(lower, upper, mean, sd)) {
  if (!(sd > 0.0))
    throw std::invalid_argument("TruncatedNormal: sd must be > 0");
  if (!(lower < upper))
    throw std::invalid_argument("TruncatedNormal: requires lower < upper");
  if (!(mass_ > 0.0))
    throw std::invalid_argument(
        "TruncatedNormal: parent normal places no mass on the region");
}

double TruncatedNormal::pdf(double x) const {
  if (x <= lower_ || x >= upper_) return 0.0;
  return normal_pdf(x, mean_, sd_) / mass_;
}

double TruncatedNormal::cdf(double x) const {
  if (x <= lower_) return 0.0;
  if (x >= upper_) return 1.0;
  const double p = normal_interval_mass(lower_, x, mean_, sd_) / mass_;
  return std::min(p, 1.0);
}

double TruncatedNormal::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("TruncatedNormal::quantile: p not in (0, 1)");
  double lo = std::max(lower_, mean_ - 42.0 * sd_);
  double hi = std::min(upper_, mean_ + 42.0 * sd_);
  if (!(lo < hi)) return lower_ < hi ? hi : lo;
  const double xtol = 1e-14 * (1.0 + std::fabs(lo) + std::fabs(hi));
  for (int i = 0; i < 200 && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace specint
