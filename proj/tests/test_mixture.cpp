#include <doctest.h>

#include <cmath>
#include <random>

#include "specint/effects.hpp"
#include "specint/inference.hpp"
#include "specint/mixture.hpp"
#include "specint/oracle.hpp"

using namespace specint;

namespace {

const TwoByTwoTable kClarifyAcs(74, 10, 74, 25);
const SpecialInterval kInterval(0.0, 0.1);

PosteriorMixture random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> z(-3.0, 3.0);
  std::uniform_real_distribution<double> s(0.2, 1.5);
  std::uniform_real_distribution<double> eps(0.02, 0.6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double se = s(rng);
  const NormalLikelihood lik(z(rng) * se, se);
  const SpecialInterval interval(z(rng) * 0.1, eps(rng));
  double a = u(rng), b = u(rng), c = u(rng);
  const double sum = a + b + c;
  return PosteriorMixture::from_normal(lik, interval,
                                       {a / sum, b / sum, c / sum});
}

}  // namespace

TEST_CASE("mixture cdf limits") {
  const PosteriorMixture m =
      PosteriorMixture::cut_normal(likelihood(kClarifyAcs), kInterval);
  CHECK(m.cdf(-1e30) == 0.0);
  CHECK(m.cdf(1e30) == 1.0);
}

TEST_CASE("two-step mixture cdf at the paper's upper interval limit") {
  const MethodResult res = two_step(likelihood(kClarifyAcs), kInterval, 0.5);
  CHECK(res.mixture.cdf(std::log(0.992)) == doctest::Approx(0.975).epsilon(0.002));
}

TEST_CASE("p-hybrid mixture quantiles hit the published interval") {
  const MethodResult res = p_hybrid(likelihood(kClarifyAcs), kInterval, 0.05);
  CHECK(std::fabs(res.mixture.quantile(0.025) - std::log(0.136)) < 0.004);
  CHECK(std::fabs(res.mixture.quantile(0.975) - std::log(0.971)) < 0.004);
}

TEST_CASE("mixture quantile/cdf roundtrip") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const PosteriorMixture m = random_mixture(rng);
    for (double p : {0.005, 0.025, 0.31, 0.5, 0.777, 0.975, 0.995})
      CHECK(std::fabs(m.cdf(m.quantile(p)) - p) < 1e-8);
  }
}

TEST_CASE("mixture cdf is nondecreasing") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const PosteriorMixture m = random_mixture(rng);
    double prev = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.05) {
      const double p = m.cdf(x);
      CHECK(p >= prev);
      prev = p;
    }
  }
}

TEST_CASE("mixture pdf integrates to one") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    const PosteriorMixture m = random_mixture(rng);
    // Piecewise so the integrand is smooth on each panel.
    const double l = m.interval().lower(), u = m.interval().upper();
    auto pdf = [&](double x) { return m.pdf(x); };
    const double total =
        oracle::adaptive_simpson(pdf, -30.0, l, 1e-10) +
        oracle::adaptive_simpson(pdf, l, u, 1e-10) +
        oracle::adaptive_simpson(pdf, u, 30.0, 1e-10);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("central interval of the degenerate flat mixture is the Wald CI") {
  const NormalLikelihood lik = likelihood(kClarifyAcs);
  const PosteriorMixture m = PosteriorMixture::cut_normal(lik, kInterval);
  const auto ci = m.central_interval(0.95);
  const auto wald = wald_ci(lik, 0.95);
  CHECK(std::fabs(ci.first - std::log(wald.first)) < 1e-9);
  CHECK(std::fabs(ci.second - std::log(wald.second)) < 1e-9);
}

TEST_CASE("central intervals reproduce the published rows") {
  const NormalLikelihood lik = likelihood(kClarifyAcs);
  const auto two = two_step(lik, kInterval, 0.8).mixture.central_interval(0.95);
  CHECK(std::fabs(std::exp(two.first) - 0.141) < 0.005);
  CHECK(std::fabs(std::exp(two.second) - 1.060) < 0.005);

  const auto qh = q_hybrid(lik, kInterval, 0.01).mixture.central_interval(0.95);
  CHECK(std::fabs(std::exp(qh.first) - 0.135) < 0.005);
  CHECK(std::fabs(std::exp(qh.second) - 0.732) < 0.005);
}

TEST_CASE("zero-weight pieces are skipped during inversion") {
  const NormalLikelihood lik(0.0, 1.0);
  const SpecialInterval interval(0.0, 0.5);
  const PosteriorMixture m =
      PosteriorMixture::from_normal(lik, interval, {0.5, 0.0, 0.5});
  // All mass outside the interval: the cdf is flat across it.
  CHECK(m.cdf(interval.lower()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.cdf(interval.upper()) == doctest::Approx(0.5).epsilon(1e-12));
  // Quantile at the flat level reports the infimum of the level set.
  CHECK(m.quantile(0.5) == doctest::Approx(interval.lower()).epsilon(1e-9));
  const double x = m.quantile(0.7);
  CHECK(x > interval.upper());
  CHECK(std::fabs(m.cdf(x) - 0.7) < 1e-8);
}

TEST_CASE("point interval carries an atom at theta0") {
  const NormalLikelihood lik(1.2, 1.0);
  const SpecialInterval point(0.0, 0.0);
  const PosteriorMixture m =
      PosteriorMixture::from_normal(lik, point, {0.3, 0.4, 0.3});
  CHECK(m.inside_is_atom());
  const double below = m.cdf(-1e-12);
  CHECK(m.cdf(0.0) == doctest::Approx(below + 0.4).epsilon(1e-12));
  // Quantiles inside the jump land on the atom.
  CHECK(m.quantile(below + 0.2) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("mixture weight validation") {
  const NormalLikelihood lik(0.0, 1.0);
  const SpecialInterval interval(0.0, 0.1);
  CHECK_THROWS_AS(
      PosteriorMixture::from_normal(lik, interval, {0.5, 0.2, 0.2}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      PosteriorMixture::from_normal(lik, interval, {1.2, -0.2, 0.0}),
      std::invalid_argument);
}
