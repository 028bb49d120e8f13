#include "specint/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specint/errors.hpp"
#include "specint/normal.hpp"

namespace specint {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RegionMasses {
  double below;
  double inside;
  double above;
};

// Masses of the flat-prior posterior N(estimate, se^2) on the three regions.
RegionMasses flat_masses(const NormalLikelihood& lik,
                         const SpecialInterval& interval) {
  const double m = lik.estimate(), s = lik.se();
  return {normal_interval_mass(-kInf, interval.lower(), m, s),
          normal_interval_mass(interval.lower(), interval.upper(), m, s),
          normal_interval_mass(interval.upper(), kInf, m, s)};
}

// Weights with the inside mass fixed and the rest split in proportion to
// the outside-conditional posterior.
std::array<double, 3> split_outside(const RegionMasses& fm,
                                    double inside_weight) {
  const double outside = fm.below + fm.above;
  if (!(outside > 0.0))
    throw std::invalid_argument(
        "posterior mass outside the interval underflows to zero");
  const double rest = 1.0 - inside_weight;
  return {rest * (fm.below / outside), inside_weight,
          rest * (fm.above / outside)};
}

// The probability of {theta >= theta0 - epsilon} as reported for methods
// that assign the interval probability directly: the far-side tail keeps
// the value the diffuse-prior (flat) posterior gives it, rather than being
// rescaled with the rest of the outside mass.
double carried_tail_prob_ge_lower(const NormalLikelihood& lik,
                                  const SpecialInterval& interval,
                                  double interval_prob) {
  const RegionMasses fm = flat_masses(lik, interval);
  double p;
  if (lik.estimate() <= interval.theta0())
    p = interval_prob + fm.above;
  else
    p = 1.0 - fm.below;
  return std::clamp(p, interval_prob, 1.0);
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::flat: return "flat";
    case Method::normal_g: return "normal-g";
    case Method::two_step: return "two-step";
    case Method::p_hybrid: return "p-hybrid";
    case Method::q_hybrid: return "q-hybrid";
  }
  return "?";
}

std::string side_name(Side s) {
  switch (s) {
    case Side::lower: return "lower";
    case Side::upper: return "upper";
    case Side::none: return "none";
  }
  return "?";
}

MethodResult flat_posterior(const NormalLikelihood& lik,
                            const SpecialInterval& interval) {
  const RegionMasses fm = flat_masses(lik, interval);
  const double ge_lower = normal_interval_mass(interval.lower(), kInf,
                                               lik.estimate(), lik.se());
  return {Method::flat, fm.inside, ge_lower,
          PosteriorMixture::cut_normal(lik, interval), {}};
}

double standard_bayes_normal_g(const NormalLikelihood& lik,
                               const SpecialInterval& interval, double alpha,
                               double g_sd) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("standard_bayes_normal_g: alpha not in [0, 1]");
  if (!(g_sd > 0.0))
    throw std::invalid_argument("standard_bayes_normal_g: g_sd must be > 0");

  const double m_h = mean_likelihood_inside(lik, interval);

  // Marginal of the data under the outside prior.  The likelihood times
  // N(theta0, g_sd^2) factors into N(estimate; theta0, se^2 + g_sd^2) and a
  // normal in theta with the product mean and variance.
  const double se2 = lik.se() * lik.se(), g2 = g_sd * g_sd;
  const double marginal =
      normal_pdf(lik.estimate(), interval.theta0(), std::sqrt(se2 + g2));
  double m_g;
  if (interval.is_point()) {
    m_g = marginal;
  } else {
    const double v = se2 * g2 / (se2 + g2);
    const double prod_mean =
        (interval.theta0() * se2 + lik.estimate() * g2) / (se2 + g2);
    const double post_outside =
        1.0 - normal_interval_mass(interval.lower(), interval.upper(),
                                   prod_mean, std::sqrt(v));
    const double g_outside =
        1.0 - normal_interval_mass(interval.lower(), interval.upper(),
                                   interval.theta0(), g_sd);
    if (!(g_outside > 0.0))
      throw std::invalid_argument(
          "standard_bayes_normal_g: g places no mass outside the interval");
    m_g = marginal * post_outside / g_outside;
  }
  return alpha * m_h / (alpha * m_h + (1.0 - alpha) * m_g);
}

MethodResult normal_g_posterior(const NormalLikelihood& lik,
                                const SpecialInterval& interval, double alpha,
                                double g_sd) {
  const double p = standard_bayes_normal_g(lik, interval, alpha, g_sd);

  // Outside the interval the posterior is the likelihood-g product normal,
  // truncated; inside it is the likelihood truncated (h uniform).
  const double se2 = lik.se() * lik.se(), g2 = g_sd * g_sd;
  const double v = se2 * g2 / (se2 + g2);
  const double prod_mean =
      (interval.theta0() * se2 + lik.estimate() * g2) / (se2 + g2);
  const double sv = std::sqrt(v);
  const double below_m =
      normal_interval_mass(-kInf, interval.lower(), prod_mean, sv);
  const double above_m =
      normal_interval_mass(interval.upper(), kInf, prod_mean, sv);
  const double outside = below_m + above_m;
  if (!(outside > 0.0))
    throw std::invalid_argument(
        "normal_g_posterior: outside posterior mass underflows to zero");
  const std::array<double, 3> w = {(1.0 - p) * (below_m / outside), p,
                                   (1.0 - p) * (above_m / outside)};

  std::optional<TruncatedNormal> below, inside, above;
  if (below_m > 0.0)
    below.emplace(prod_mean, sv, -kInf, interval.lower());
  if (above_m > 0.0)
    above.emplace(prod_mean, sv, interval.upper(), kInf);
  if (!interval.is_point() &&
      normal_interval_mass(interval.lower(), interval.upper(), lik.estimate(),
                           lik.se()) > 0.0)
    inside.emplace(lik.estimate(), lik.se(), interval.lower(),
                   interval.upper());

  PosteriorMixture mix(interval, std::move(below), std::move(inside),
                       std::move(above), w);
  Diagnostics diag;
  diag.g_sd = g_sd;
  diag.m_inside = mean_likelihood_inside(lik, interval);
  return {Method::normal_g, p, w[1] + w[2], std::move(mix), diag};
}

double mean_likelihood_inside(const NormalLikelihood& lik,
                              const SpecialInterval& interval) {
  if (interval.is_point())
    return normal_pdf(interval.theta0(), lik.estimate(), lik.se());
  const double mass = normal_interval_mass(
      interval.lower(), interval.upper(), lik.estimate(), lik.se());
  return mass / (2.0 * interval.epsilon());
}

double shell_mean_likelihood(const NormalLikelihood& lik,
                             const SpecialInterval& interval, double c) {
  if (!(c > interval.epsilon()))
    throw std::invalid_argument("shell_mean_likelihood: requires c > epsilon");
  const double t0 = interval.theta0();
  const double m = lik.estimate(), s = lik.se();
  const double mass =
      normal_interval_mass(t0 - c, interval.lower(), m, s) +
      normal_interval_mass(interval.upper(), t0 + c, m, s);
  return mass / (2.0 * (c - interval.epsilon()));
}

ShellOptimum optimize_shell(const NormalLikelihood& lik,
                            const SpecialInterval& interval) {
  const double eps = interval.epsilon();
  const double span =
      std::max(std::fabs(lik.estimate() - interval.theta0()), eps) +
      10.0 * lik.se();

  auto objective = [&](double c) {
    return shell_mean_likelihood(lik, interval, c);
  };

  // Coarse grid, then golden-section refinement around the best point.
  constexpr int kGrid = 512;
  const double step = (span - eps) / kGrid;
  int best = 1;
  double best_val = -1.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double val = objective(eps + i * step);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  double a = eps + (best - 1) * step;
  double b = eps + std::min(best + 1, kGrid) * step;

  constexpr double kGoldenRatio = 0.61803398874989484820;
  double c1 = b - kGoldenRatio * (b - a);
  double c2 = a + kGoldenRatio * (b - a);
  double f1 = objective(c1), f2 = objective(c2);
  const double ctol = 1e-7 * lik.se();
  for (int i = 0; i < 300 && b - a > ctol; ++i) {
    if (f1 > f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - kGoldenRatio * (b - a);
      f1 = objective(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + kGoldenRatio * (b - a);
      f2 = objective(c2);
    }
  }
  const double c_star = 0.5 * (a + b);
  return {c_star, std::max(objective(c_star), best_val)};
}

MethodResult two_step(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("two_step: alpha not in (0, 1)");
  const double m_h = mean_likelihood_inside(lik, interval);
  const ShellOptimum opt = optimize_shell(lik, interval);
  const double p_l =
      alpha * m_h / (alpha * m_h + (1.0 - alpha) * opt.m_bar_star);

  const RegionMasses fm = flat_masses(lik, interval);
  PosteriorMixture mix =
      PosteriorMixture::from_normal(lik, interval, split_outside(fm, p_l));
  Diagnostics diag;
  diag.c_star = opt.c_star;
  diag.m_bar_star = opt.m_bar_star;
  diag.m_inside = m_h;
  return {Method::two_step, p_l,
          carried_tail_prob_ge_lower(lik, interval, p_l), std::move(mix),
          diag};
}

double endpoint_ratio_lower_bound(const NormalLikelihood& lik,
                                  const SpecialInterval& interval,
                                  double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("endpoint_ratio_lower_bound: alpha not in (0, 1)");
  if (!interval.contains(lik.estimate()))
    throw std::domain_error(
        "endpoint_ratio_lower_bound: likelihood peak must lie inside the "
        "interval");
  const double m_inside = mean_likelihood_inside(lik, interval);
  const double m_limits =
      0.5 * (normal_pdf(interval.lower(), lik.estimate(), lik.se()) +
             normal_pdf(interval.upper(), lik.estimate(), lik.se()));
  return alpha * m_inside / m_limits;
}

OneSidedP one_sided_p(const NormalLikelihood& lik,
                      const SpecialInterval& interval) {
  const double f_lower =
      normal_cdf(lik.estimate(), interval.lower(), lik.se());
  if (f_lower <= 0.5) return {f_lower, Side::lower};
  const double f_upper =
      normal_cdf(lik.estimate(), interval.upper(), lik.se());
  if (f_upper >= 0.5) return {1.0 - f_upper, Side::upper};
  return {std::numeric_limits<double>::quiet_NaN(), Side::none};
}

namespace {

// lambda = far-side over near-side mass of the outside-conditional
// posterior, relative to the side the one-sided test points at.
double lambda_for_side(const RegionMasses& fm, Side side) {
  if (side == Side::lower) return fm.above / fm.below;
  return fm.below / fm.above;
}

}  // namespace

double gamma_floor(const NormalLikelihood& lik,
                   const SpecialInterval& interval) {
  const Side side = one_sided_p(lik, interval).side;
  if (side == Side::none)
    throw NoSidedEvidenceError(
        "gamma_floor: undefined when neither one-sided test applies");
  const double lambda = lambda_for_side(flat_masses(lik, interval), side);
  return lambda / (1.0 + lambda);
}

MethodResult p_hybrid(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::invalid_argument("p_hybrid: gamma not in (0, 1]");
  const OneSidedP one_sided = one_sided_p(lik, interval);
  if (one_sided.side == Side::none)
    throw NoSidedEvidenceError(
        "p_hybrid: estimate falls inside the interval; neither one-sided "
        "test applies. Carry the prior probability over instead "
        "(prior_carryover).");

  const RegionMasses fm = flat_masses(lik, interval);
  const double lambda = lambda_for_side(fm, one_sided.side);
  const double floor = lambda / (1.0 + lambda);
  if (gamma + 1e-15 < floor)
    throw GammaFloorError(
        "p_hybrid: gamma = " + std::to_string(gamma) +
            " is below the consistency floor lambda/(1+lambda) = " +
            std::to_string(floor) +
            "; the implied interval probability would be negative",
        floor);

  const double interval_prob =
      std::max(0.0, gamma - lambda * (1.0 - gamma));
  std::array<double, 3> w;
  if (one_sided.side == Side::lower)
    w = {1.0 - gamma, interval_prob, lambda * (1.0 - gamma)};
  else
    w = {lambda * (1.0 - gamma), interval_prob, 1.0 - gamma};

  PosteriorMixture mix = PosteriorMixture::from_normal(lik, interval, w);
  Diagnostics diag;
  diag.p_value = one_sided.p;
  diag.side = one_sided.side;
  diag.lambda = lambda;
  diag.gamma_floor = floor;
  const double prob_ge_lower =
      one_sided.side == Side::lower ? gamma : w[1] + w[2];
  return {Method::p_hybrid, interval_prob, prob_ge_lower, std::move(mix),
          diag};
}

MethodResult prior_carryover(const NormalLikelihood& lik,
                             const SpecialInterval& interval,
                             double prior_prob) {
  if (!(prior_prob >= 0.0 && prior_prob <= 1.0))
    throw std::invalid_argument("prior_carryover: prior_prob not in [0, 1]");
  const RegionMasses fm = flat_masses(lik, interval);
  const std::array<double, 3> w = split_outside(fm, prior_prob);
  PosteriorMixture mix = PosteriorMixture::from_normal(lik, interval, w);
  Diagnostics diag;
  diag.side = Side::none;
  return {Method::p_hybrid, prior_prob, w[1] + w[2], std::move(mix), diag};
}

double q_value(const NormalLikelihood& lik, const SpecialInterval& interval,
               double mu_star) {
  // Tail mass beyond theta0 +- d under N(mu_star, se^2), d the distance
  // from the estimate to theta0.
  const double d = std::fabs(lik.estimate() - interval.theta0());
  const double lo = interval.theta0() - d, hi = interval.theta0() + d;
  return normal_interval_mass(-kInf, lo, mu_star, lik.se()) +
         normal_interval_mass(hi, kInf, mu_star, lik.se());
}

MethodResult q_hybrid(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double beta) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("q_hybrid: beta not in [0, 1]");
  const RegionMasses fm = flat_masses(lik, interval);
  const std::array<double, 3> w = split_outside(fm, beta);
  PosteriorMixture mix = PosteriorMixture::from_normal(lik, interval, w);
  Diagnostics diag;
  diag.q_value = q_value(lik, interval, interval.upper());
  diag.lambda = fm.above / fm.below;
  return {Method::q_hybrid, beta,
          carried_tail_prob_ge_lower(lik, interval, beta), std::move(mix),
          diag};
}

}  // namespace specint
