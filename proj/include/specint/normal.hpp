#pragma once

namespace specint {

/// Standard normal density.
double std_normal_pdf(double z);

/// Standard normal cdf via the complementary error function.
double std_normal_cdf(double z);

/// Inverse of std_normal_cdf, by bisection.  Requires 0 < p < 1.
double std_normal_quantile(double p);

double normal_pdf(double x, double mean, double sd);
double normal_cdf(double x, double mean, double sd);

/// P(lo < X < hi) for X ~ N(mean, sd^2).  Bounds may be +-infinity.
/// Evaluated through erfc differences on the far side of the mean, so
/// one-sided tail masses keep full relative accuracy.
double normal_interval_mass(double lo, double hi, double mean, double sd);

}  // namespace specint
