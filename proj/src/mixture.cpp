#include "specint/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specint/normal.hpp"

namespace specint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<TruncatedNormal> make_piece(double mean, double sd, double lo,
                                          double hi) {
  if (!(lo < hi)) return std::nullopt;
  if (!(normal_interval_mass(lo, hi, mean, sd) > 0.0)) return std::nullopt;
  return TruncatedNormal(mean, sd, lo, hi);
}

}  // namespace

PosteriorMixture::PosteriorMixture(SpecialInterval interval,
                                   std::optional<TruncatedNormal> below,
                                   std::optional<TruncatedNormal> inside,
                                   std::optional<TruncatedNormal> above,
                                   std::array<double, 3> weights)
    : interval_(interval),
      below_(std::move(below)),
      inside_(std::move(inside)),
      above_(std::move(above)),
      weights_(weights) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0))
      throw std::invalid_argument("PosteriorMixture: negative weight");
    sum += w;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("PosteriorMixture: weights must sum to 1");
  if (weights_[0] > 0.0 && !below_)
    throw std::invalid_argument("PosteriorMixture: below piece missing");
  if (weights_[2] > 0.0 && !above_)
    throw std::invalid_argument("PosteriorMixture: above piece missing");
  if (weights_[1] > 0.0 && !inside_ && !interval_.is_point())
    throw std::invalid_argument("PosteriorMixture: inside piece missing");
}

PosteriorMixture PosteriorMixture::cut_normal(const NormalLikelihood& lik,
                                              const SpecialInterval& interval) {
  const double m = lik.estimate(), s = lik.se();
  const double l = interval.lower(), u = interval.upper();
  std::array<double, 3> w = {normal_interval_mass(-kInf, l, m, s),
                             normal_interval_mass(l, u, m, s),
                             normal_interval_mass(u, kInf, m, s)};
  const double sum = w[0] + w[1] + w[2];
  for (double& wi : w) wi /= sum;
  return PosteriorMixture(interval, make_piece(m, s, -kInf, l),
                          make_piece(m, s, l, u), make_piece(m, s, u, kInf),
                          w);
}

PosteriorMixture PosteriorMixture::from_normal(const NormalLikelihood& lik,
                                               const SpecialInterval& interval,
                                               std::array<double, 3> weights) {
  const double m = lik.estimate(), s = lik.se();
  const double l = interval.lower(), u = interval.upper();
  return PosteriorMixture(interval, make_piece(m, s, -kInf, l),
                          make_piece(m, s, l, u), make_piece(m, s, u, kInf),
                          weights);
}

bool PosteriorMixture::inside_is_atom() const {
  return weights_[1] > 0.0 && !inside_;
}

double PosteriorMixture::cdf(double x) const {
  double p = 0.0;
  if (weights_[0] > 0.0) p += weights_[0] * below_->cdf(x);
  if (weights_[1] > 0.0) {
    if (inside_)
      p += weights_[1] * inside_->cdf(x);
    else if (x >= interval_.theta0())
      p += weights_[1];
  }
  if (weights_[2] > 0.0) p += weights_[2] * above_->cdf(x);
  return std::min(p, 1.0);
}

double PosteriorMixture::pdf(double x) const {
  double d = 0.0;
  if (weights_[0] > 0.0) d += weights_[0] * below_->pdf(x);
  if (weights_[1] > 0.0 && inside_) d += weights_[1] * inside_->pdf(x);
  if (weights_[2] > 0.0) d += weights_[2] * above_->pdf(x);
  return d;
}

double PosteriorMixture::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("PosteriorMixture::quantile: p not in (0, 1)");
  double lo = kInf, hi = -kInf;
  auto widen = [&](const std::optional<TruncatedNormal>& piece, double w) {
    if (w <= 0.0 || !piece) return;
    lo = std::min(lo, std::max(piece->lower(), piece->mean() - 42.0 * piece->sd()));
    hi = std::max(hi, std::min(piece->upper(), piece->mean() + 42.0 * piece->sd()));
  };
  widen(below_, weights_[0]);
  widen(inside_, weights_[1]);
  widen(above_, weights_[2]);
  if (inside_is_atom()) {
    lo = std::min(lo, interval_.theta0());
    hi = std::max(hi, interval_.theta0());
  }
  if (!(lo <= hi))
    throw std::logic_error("PosteriorMixture::quantile: no mass");
  // Invariant: cdf(lo) < p <= cdf(hi); converges onto the infimum of the
  // level set, which also resolves flat stretches and atoms.
  lo -= 1.0;
  hi += 1.0;
  const double xtol = 1e-14 * (1.0 + std::fabs(lo) + std::fabs(hi));
  for (int i = 0; i < 200 && hi - lo > xtol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) < p)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

std::pair<double, double> PosteriorMixture::central_interval(
    double level) const {
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("central_interval: level not in (0, 1)");
  const double tail = 0.5 * (1.0 - level);
  return {quantile(tail), quantile(1.0 - tail)};
}

}  // namespace specint
