#include "specint/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace specint {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}  // namespace

double std_normal_pdf(double z) {
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) {
  if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
  return 0.5 * std::erfc(-z * kInvSqrt2);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("std_normal_quantile: p must be in (0, 1)");
  // Bracket covers every p representable as a positive double.
  double lo = -40.0, hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + std::fabs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (std_normal_cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double normal_pdf(double x, double mean, double sd) {
  return std_normal_pdf((x - mean) / sd) / sd;
}

double normal_cdf(double x, double mean, double sd) {
  return std_normal_cdf((x - mean) / sd);
}

double normal_interval_mass(double lo, double hi, double mean, double sd) {
  if (!(hi > lo)) return 0.0;
  double a = (lo - mean) / sd;
  double b = (hi - mean) / sd;
  if (std::isinf(a) && std::isinf(b)) return 1.0;
  // Reflect right-tail intervals onto the left so both erfc arguments are
  // large and positive where precision matters.
  if ((std::isinf(b) && b > 0.0 && a > 0.0) ||
      (!std::isinf(a) && !std::isinf(b) && a + b > 0.0)) {
    const double t = a;
    a = -b;
    b = -t;
  }
  // Phi(b) - Phi(a) = (erfc(-b/sqrt2) - erfc(-a/sqrt2)) / 2.
  const double mass =
      0.5 * (std::erfc(-b * kInvSqrt2) - std::erfc(-a * kInvSqrt2));
  return mass < 0.0 ? 0.0 : mass;
}

}  // namespace specint
