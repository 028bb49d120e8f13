#pragma once

namespace specint {

// Normal distribution restricted to (lower, upper).  Bounds may be
// +-infinity; the parent normal must place nonzero mass on the region.
class TruncatedNormal {
 public:
  TruncatedNormal(double mean, double sd, double lower, double upper);

  double mean() const { return mean_; }
  double sd() const { return sd_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

  /// Mass the parent normal places on (lower, upper).
  double region_mass() const { return mass_; }

  double pdf(double x) const;

  /// 0 at x <= lower, 1 at x >= upper, parent-cdf ratio in between.
  double cdf(double x) const;

  /// Inverse cdf by bisection; requires 0 < p < 1.
  double quantile(double p) const;

 private:
  double mean_;
  double sd_;
  double lower_;
  double upper_;
  double mass_;
};

}  // namespace specint
