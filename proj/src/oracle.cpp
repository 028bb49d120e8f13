#include "specint/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "specint/normal.hpp"

namespace specint::oracle {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  // A bounded jump pinned to a panel edge never satisfies the error
  // estimate; once the panel is this narrow its contribution is below
  // representation noise anyway.
  if (b - a <= 1e-12 * (1.0 + std::fabs(a) + std::fabs(b)))
    return left + right;
  if (depth <= 0)
    throw std::runtime_error("adaptive_simpson: did not converge");
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double quadrature_posterior(const NormalLikelihood& lik,
                            const std::function<double(double)>& prior,
                            const SpecialInterval& interval,
                            std::vector<double> knots) {
  const double span = 13.0 * lik.se();
  const double a = std::min(interval.lower(), lik.estimate() - span);
  const double b = std::max(interval.upper(), lik.estimate() + span);

  knots.push_back(interval.lower());
  knots.push_back(interval.upper());
  knots.push_back(interval.theta0());
  knots.push_back(lik.estimate());
  knots.push_back(a);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  auto integrand = [&](double theta) {
    return normal_pdf(lik.estimate(), theta, lik.se()) * prior(theta);
  };

  // Rough magnitude first, then refine each panel against a shared budget.
  double rough = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = std::max(knots[i], a), hi = std::min(knots[i + 1], b);
    if (!(hi > lo)) continue;
    const double m = 0.5 * (lo + hi);
    rough += std::fabs(
        simpson(lo, integrand(lo), hi, integrand(hi), integrand(m)));
  }
  const double tol = std::max(1e-300, 1e-11 * rough);

  double total = 0.0, inside = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const double lo = std::max(knots[i], a), hi = std::min(knots[i + 1], b);
    if (!(hi > lo)) continue;
    const double piece = adaptive_simpson(integrand, lo, hi, tol);
    total += piece;
    if (lo >= interval.lower() && hi <= interval.upper()) inside += piece;
  }
  if (!(total > 0.0))
    throw std::runtime_error("quadrature_posterior: zero normalizer");
  return inside / total;
}

double min_prob_over_shell_mixtures(const NormalLikelihood& lik,
                                    const SpecialInterval& interval,
                                    double alpha, int grid_resolution,
                                    int random_mixtures, std::uint64_t seed) {
  if (grid_resolution < 64)
    throw std::invalid_argument(
        "min_prob_over_shell_mixtures: grid resolution must be >= 64");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument(
        "min_prob_over_shell_mixtures: alpha not in [0, 1]");

  const double eps = interval.epsilon();
  const double t0 = interval.theta0();
  const double span =
      std::max(std::fabs(lik.estimate() - t0), eps) + 10.0 * lik.se();

  auto lik_density = [&](double theta) {
    return normal_pdf(lik.estimate(), theta, lik.se());
  };

  // Mean likelihood inside the interval, by quadrature (density at theta0
  // for the point case).
  double m_h;
  if (interval.is_point()) {
    m_h = lik_density(t0);
  } else {
    m_h = adaptive_simpson(lik_density, interval.lower(), interval.upper(),
                           1e-13) /
          (2.0 * eps);
  }

  // Per-shell mean likelihood over [t0-c, lower] U [upper, t0+c], by
  // quadrature, and the fraction of each full shell lying outside the
  // interval (the renormalization a mixture component carries).
  std::vector<double> cs(grid_resolution), mbar(grid_resolution),
      outer_frac(grid_resolution);
  for (int j = 0; j < grid_resolution; ++j) {
    const double c = eps + (j + 1) * (span - eps) / grid_resolution;
    cs[j] = c;
    const double mass =
        adaptive_simpson(lik_density, t0 - c, interval.lower(), 1e-13) +
        adaptive_simpson(lik_density, interval.upper(), t0 + c, 1e-13);
    mbar[j] = mass / (2.0 * (c - eps));
    outer_frac[j] = (c - eps) / c;
  }

  auto prob_for_marginal = [&](double m_g) {
    return alpha * m_h / (alpha * m_h + (1.0 - alpha) * m_g);
  };

  double best = 1.0;
  for (int j = 0; j < grid_resolution; ++j)
    best = std::min(best, prob_for_marginal(mbar[j]));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, grid_resolution - 1);
  std::uniform_int_distribution<int> ksize(2, 8);
  std::exponential_distribution<double> expo(1.0);
  for (int r = 0; r < random_mixtures; ++r) {
    const int k = ksize(rng);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < k; ++i) {
      const int j = pick(rng);
      const double w = expo(rng);
      num += w * outer_frac[j] * mbar[j];
      den += w * outer_frac[j];
    }
    if (den > 0.0) best = std::min(best, prob_for_marginal(num / den));
  }
  return best;
}

RandomEffectsResult dersimonian_laird_reference(
    std::span<const StudyEffect> studies, double level) {
  if (studies.empty())
    throw std::invalid_argument("dersimonian_laird_reference: no studies");
  const std::size_t k = studies.size();

  std::vector<long double> w(k), y(k);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = studies[i].estimate;
    w[i] = 1.0L / (static_cast<long double>(studies[i].se) * studies[i].se);
  }

  long double s1 = 0.0L, s2 = 0.0L, wy = 0.0L;
  for (std::size_t i = 0; i < k; ++i) {
    s1 += w[i];
    s2 += w[i] * w[i];
    wy += w[i] * y[i];
  }
  const long double ybar = wy / s1;

  long double q = 0.0L;
  for (std::size_t i = 0; i < k; ++i) q += w[i] * (y[i] - ybar) * (y[i] - ybar);

  long double tau2 = 0.0L;
  if (k > 1) {
    const long double denom = s1 - s2 / s1;
    if (denom > 0.0L) {
      tau2 = (q - static_cast<long double>(k - 1)) / denom;
      if (tau2 < 0.0L) tau2 = 0.0L;
    }
  }

  long double sstar = 0.0L, sstary = 0.0L;
  for (std::size_t i = 0; i < k; ++i) {
    const long double ws =
        1.0L / (static_cast<long double>(studies[i].se) * studies[i].se + tau2);
    sstar += ws;
    sstary += ws * y[i];
  }
  const double pooled = static_cast<double>(sstary / sstar);
  const double pooled_se = static_cast<double>(std::sqrt(1.0L / sstar));
  const double z = std_normal_quantile(1.0 - 0.5 * (1.0 - level));
  return RandomEffectsResult{
      pooled, pooled_se, static_cast<double>(tau2), static_cast<double>(q),
      {std::exp(pooled - z * pooled_se), std::exp(pooled + z * pooled_se)}};
}

}  // namespace specint::oracle
