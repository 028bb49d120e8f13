#pragma once

#include <array>
#include <optional>
#include <utility>

#include "specint/truncated_normal.hpp"
#include "specint/types.hpp"

namespace specint {

// Three-piece post-data distribution: a truncated normal below the special
// interval, one inside it, and one above it, carrying weights that sum to
// one.  Every inference method reports its post-data distribution in this
// form.
//
// A piece may be absent when its weight is zero (e.g. the region holds no
// representable parent mass).  For a point interval the inside piece is a
// point mass at theta0 whenever its weight is positive; the cdf then jumps
// at theta0 and stays right-continuous.
class PosteriorMixture {
 public:
  PosteriorMixture(SpecialInterval interval,
                   std::optional<TruncatedNormal> below,
                   std::optional<TruncatedNormal> inside,
                   std::optional<TruncatedNormal> above,
                   std::array<double, 3> weights);

  /// The normal posterior N(estimate, se^2) cut at the interval boundaries,
  /// with the weights the parent normal induces.  Distributionally equal to
  /// the uncut normal.
  static PosteriorMixture cut_normal(const NormalLikelihood& lik,
                                     const SpecialInterval& interval);

  /// Pieces of the normal posterior truncated to the three regions, with
  /// caller-supplied weights.
  static PosteriorMixture from_normal(const NormalLikelihood& lik,
                                      const SpecialInterval& interval,
                                      std::array<double, 3> weights);

  const SpecialInterval& interval() const { return interval_; }
  const std::optional<TruncatedNormal>& below() const { return below_; }
  const std::optional<TruncatedNormal>& inside() const { return inside_; }
  const std::optional<TruncatedNormal>& above() const { return above_; }
  double weight_below() const { return weights_[0]; }
  double weight_inside() const { return weights_[1]; }
  double weight_above() const { return weights_[2]; }

  /// Inside piece is a point mass at theta0 (point interval, positive weight).
  bool inside_is_atom() const;

  double cdf(double x) const;

  /// Density; any point mass is excluded.
  double pdf(double x) const;

  /// Inverse cdf by bisection; at a flat stretch of the cdf returns the
  /// infimum of the level set.  Requires 0 < p < 1.
  double quantile(double p) const;

  /// Equal-tail interval: quantiles at (1-level)/2 and 1-(1-level)/2.
  std::pair<double, double> central_interval(double level) const;

 private:
  SpecialInterval interval_;
  std::optional<TruncatedNormal> below_;
  std::optional<TruncatedNormal> inside_;
  std::optional<TruncatedNormal> above_;
  std::array<double, 3> weights_;
};

}  // namespace specint
