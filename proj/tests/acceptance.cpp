// Acceptance suite: recomputes every published number this project commits
// to, at its stated tolerance, and prints one line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "specint/datasets.hpp"
#include "specint/effects.hpp"
#include "specint/inference.hpp"
#include "specint/meta.hpp"
#include "specint/mixture.hpp"
#include "specint/oracle.hpp"

using namespace specint;

namespace {

struct Criterion {
  std::string label;
  bool ok = true;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }

  void expect_near(double got, double want, double tol,
                   const std::string& what) {
    if (!(std::fabs(got - want) <= tol)) {
      ok = false;
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s: got %.6f, want %.6f +- %g",
                    what.c_str(), got, want, tol);
      failures.push_back(buf);
    }
  }
};

const SpecialInterval kInterval(0.0, 0.1);

NormalLikelihood table1() { return likelihood(TwoByTwoTable(74, 10, 74, 25)); }
NormalLikelihood table2() { return likelihood(TwoByTwoTable(74, 5, 74, 14)); }
NormalLikelihood table3() { return likelihood(TwoByTwoTable(111, 23, 107, 31)); }

void check_or_interval(Criterion& c, const MethodResult& res, double lo,
                       double hi, double tol, const std::string& what) {
  const auto ci = res.mixture.central_interval(0.95);
  c.expect_near(std::exp(ci.first), lo, tol, what + " lower");
  c.expect_near(std::exp(ci.second), hi, tol, what + " upper");
}

NormalLikelihood random_likelihood(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> z(-4.0, 4.0);
  std::uniform_real_distribution<double> s(0.1, 1.5);
  const double se = s(rng);
  return NormalLikelihood(z(rng) * se, se);
}

void criterion_effects(Criterion& c) {
  const auto check = [&](const TwoByTwoTable& t, double odds, double lo,
                         double hi, const std::string& name) {
    const NormalLikelihood lik = likelihood(t);
    c.expect_near(std::exp(lik.estimate()), odds, 0.002, name + " OR");
    const auto ci = wald_ci(lik, 0.95);
    c.expect_near(ci.first, lo, 0.002, name + " CI lower");
    c.expect_near(ci.second, hi, 0.002, name + " CI upper");
  };
  check(TwoByTwoTable(74, 10, 74, 25), 0.306, 0.135, 0.697, "CLARIFY-ACS");
  check(TwoByTwoTable(74, 5, 74, 14), 0.311, 0.106, 0.913, "CLARIFY-MI");
  check(TwoByTwoTable(111, 23, 107, 31), 0.640, 0.344, 1.192, "STAMINA");
}

void criterion_significance(Criterion& c) {
  c.expect_near(one_sided_p(table1(), kInterval).p, 0.0049, 0.0002, "P1");
  c.expect_near(one_sided_p(table2(), kInterval).p, 0.0259, 0.0002, "P2");
  c.expect_near(one_sided_p(table3(), kInterval).p, 0.1379, 0.0002, "P3");
  c.expect_near(q_value(table1(), kInterval, 0.1), 0.0060, 0.0002, "Q1");
  c.expect_near(q_value(table2(), kInterval, 0.1), 0.0365, 0.0002, "Q2");
  c.expect_near(q_value(table3(), kInterval, 0.1), 0.1805, 0.0002, "Q3");
}

void criterion_two_step(Criterion& c) {
  struct Row {
    NormalLikelihood lik;
    double alpha, prob, lo, hi;
    const char* name;
  };
  const Row rows[] = {
      {table1(), 0.5, 0.064, 0.136, 0.992, "T1 a=0.5"},
      {table1(), 0.8, 0.214, 0.141, 1.060, "T1 a=0.8"},
      {table2(), 0.5, 0.232, 0.112, 1.082, "T2 a=0.5"},
      {table2(), 0.8, 0.547, 0.128, 1.093, "T2 a=0.8"},
      {table3(), 0.5, 0.446, 0.369, 1.112, "T3 a=0.5"},
      {table3(), 0.8, 0.763, 0.423, 1.099, "T3 a=0.8"},
  };
  for (const Row& r : rows) {
    const MethodResult res = two_step(r.lik, kInterval, r.alpha);
    c.expect_near(res.interval_prob, r.prob, 0.002,
                  std::string(r.name) + " interval prob");
    check_or_interval(c, res, r.lo, r.hi, 0.006, r.name);
  }
}

void criterion_p_hybrid(Criterion& c) {
  const MethodResult g05 = p_hybrid(table1(), kInterval, 0.05);
  const MethodResult g02 = p_hybrid(table1(), kInterval, 0.02);
  const MethodResult g01 = p_hybrid(table1(), kInterval, 0.01);
  c.expect_near(g05.interval_prob, 0.049, 0.001, "gamma=0.05");
  c.expect_near(g02.interval_prob, 0.019, 0.001, "gamma=0.02");
  // The published cell reads 0.099; the identity gives 0.009, and the
  // suite pins the computed value.
  c.expect_near(g01.interval_prob, 0.009, 0.001,
                "gamma=0.01 (published as 0.099)");
  c.expect(std::fabs(g01.interval_prob - 0.099) > 0.05,
           "computed value must sit far from the published 0.099");
  check_or_interval(c, g05, 0.136, 0.971, 0.006, "gamma=0.05");
  check_or_interval(c, g02, 0.135, 0.813, 0.006, "gamma=0.02");
  check_or_interval(c, g01, 0.135, 0.725, 0.006, "gamma=0.01");
  c.expect_near(gamma_floor(table1(), kInterval), 0.001, 0.0005, "floor");
}

void criterion_q_hybrid(Criterion& c) {
  const MethodResult b05 = q_hybrid(table1(), kInterval, 0.05);
  const MethodResult b01 = q_hybrid(table1(), kInterval, 0.01);
  c.expect_near(b05.prob_ge_lower, 0.051, 0.001, "T1 beta=0.05");
  c.expect_near(b01.prob_ge_lower, 0.011, 0.001, "T1 beta=0.01");
  check_or_interval(c, b05, 0.136, 0.973, 0.006, "T1 beta=0.05");
  check_or_interval(c, b01, 0.135, 0.732, 0.006, "T1 beta=0.01");

  const MethodResult t35 = q_hybrid(table3(), kInterval, 0.5);
  const MethodResult t38 = q_hybrid(table3(), kInterval, 0.8);
  c.expect_near(t35.prob_ge_lower, 0.543, 0.002, "T3 beta=0.5");
  c.expect_near(t38.prob_ge_lower, 0.843, 0.002, "T3 beta=0.8");
  check_or_interval(c, t35, 0.375, 1.104, 0.006, "T3 beta=0.5");
  check_or_interval(c, t38, 0.437, 1.098, 0.006, "T3 beta=0.8");
}

void criterion_flat(Criterion& c) {
  const MethodResult t1 = flat_posterior(table1(), kInterval);
  const MethodResult t2 = flat_posterior(table2(), kInterval);
  const MethodResult t3 = flat_posterior(table3(), kInterval);
  c.expect_near(t1.interval_prob, 0.004, 0.002, "T1 interval");
  c.expect_near(t1.prob_ge_lower, 0.005, 0.002, "T1 >= lower");
  c.expect_near(t2.interval_prob, 0.0154, 0.002, "T2 interval");
  c.expect_near(t2.prob_ge_lower, 0.026, 0.002, "T2 >= lower");
  c.expect_near(t3.interval_prob, 0.095, 0.002, "T3 interval");
  c.expect_near(t3.prob_ge_lower, 0.138, 0.002, "T3 >= lower");
}

void criterion_properties(Criterion& c) {
  // Q-value symmetry and ordering.
  {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> eps(0.01, 0.5);
    std::uniform_real_distribution<double> inside(-1.0, 1.0);
    std::uniform_real_distribution<double> outside(1.0 + 1e-6, 6.0);
    for (int i = 0; i < 100; ++i) {
      const NormalLikelihood lik = random_likelihood(rng);
      const SpecialInterval interval(0.0, eps(rng));
      const double qu = q_value(lik, interval, interval.upper());
      const double ql = q_value(lik, interval, interval.lower());
      c.expect(std::fabs(qu - ql) < 1e-12, "q symmetry");
      c.expect(q_value(lik, interval, inside(rng) * interval.epsilon()) <=
                   qu + 1e-12,
               "q ordering inside");
      const double sign = (i % 2 == 0) ? 1.0 : -1.0;
      c.expect(q_value(lik, interval,
                       sign * outside(rng) * interval.epsilon()) > qu,
               "q ordering outside");
    }
  }
  // Brute-force shell mixtures never undercut the two-step bound.
  {
    std::mt19937_64 rng(103);
    std::uniform_real_distribution<double> alphas(0.1, 0.9);
    for (int i = 0; i < 20; ++i) {
      const NormalLikelihood lik = random_likelihood(rng);
      const double alpha = alphas(rng);
      const double p_l = two_step(lik, kInterval, alpha).interval_prob;
      const double brute = oracle::min_prob_over_shell_mixtures(
          lik, kInterval, alpha, 64, 50);
      c.expect(brute >= p_l - 1e-4, "brute force undercut the bound");
    }
  }
  // Diffuse-prior pathology: monotone to one once g covers the data.
  {
    double prev = 0.0;
    double g_sd = 2.0;
    for (int i = 0; i < 14; ++i, g_sd *= 2.0) {
      const double p = standard_bayes_normal_g(table1(), kInterval, 0.5, g_sd);
      c.expect(p > prev, "normal-g not increasing in g_sd");
      prev = p;
    }
    c.expect(prev > 0.99, "normal-g did not approach one");
  }
  // Support containment of the minimizing shell.
  {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> zs(0.0, 2.47);
    std::uniform_real_distribution<double> ss(0.1, 2.0);
    const SpecialInterval point(0.0, 0.0);
    for (int i = 0; i < 50; ++i) {
      const double se = ss(rng);
      const double z = zs(rng);
      const ShellOptimum opt =
          optimize_shell(NormalLikelihood(z * se, se), point);
      c.expect(opt.c_star <= z * se + se + 1e-6, "shell support too wide");
    }
  }
  // Mixture quantile/cdf roundtrip.
  {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> eps(0.02, 0.6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
      const NormalLikelihood lik = random_likelihood(rng);
      const SpecialInterval interval(0.0, eps(rng));
      double a = u(rng), b = u(rng), d = u(rng);
      const double sum = a + b + d;
      const PosteriorMixture m = PosteriorMixture::from_normal(
          lik, interval, {a / sum, b / sum, d / sum});
      for (double p : {0.005, 0.025, 0.5, 0.86, 0.975, 0.995})
        c.expect(std::fabs(m.cdf(m.quantile(p)) - p) < 1e-8,
                 "mixture roundtrip");
    }
  }
  // DerSimonian-Laird equivalence and permutation invariance.
  {
    std::mt19937_64 rng(113);
    std::uniform_real_distribution<double> y(-1.0, 1.0);
    std::uniform_real_distribution<double> s(0.05, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<StudyEffect> studies;
      const int k = 2 + static_cast<int>(rng() % 6);
      for (int i = 0; i < k; ++i) studies.push_back({"s", y(rng), s(rng)});
      const RandomEffectsResult a = dersimonian_laird(studies, 0.95);
      const RandomEffectsResult b =
          oracle::dersimonian_laird_reference(studies, 0.95);
      c.expect(std::fabs(a.pooled - b.pooled) < 1e-10, "DL pooled mismatch");
      c.expect(std::fabs(a.tau2 - b.tau2) < 1e-10, "DL tau2 mismatch");
      c.expect(std::fabs(a.pooled_se - b.pooled_se) < 1e-10,
               "DL pooled_se mismatch");
      std::shuffle(studies.begin(), studies.end(), rng);
      const RandomEffectsResult p = dersimonian_laird(studies, 0.95);
      c.expect(std::fabs(a.pooled - p.pooled) < 1e-12 &&
                   std::fabs(a.tau2 - p.tau2) < 1e-12,
               "DL permutation variance");
    }
  }
}

void criterion_not_reproducible(Criterion& c) {
  // The combined interval of the four large published studies is out of
  // reach: their event counts are not part of the bundled data.  The
  // random-effects code is accepted through the oracle equivalence above.
  c.expect(bundled_studies().size() == 3,
           "bundled data should hold exactly the three small studies");
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<void(Criterion&)> run;
  };
  const Entry entries[] = {
      {"1 effect pipeline: odds ratios and 95% intervals", criterion_effects},
      {"2 significance measures: one-sided P and Q values",
       criterion_significance},
      {"3 two-step bound: interval probabilities and central intervals",
       criterion_two_step},
      {"4 p-hybrid rows, floor, and the corrected published cell",
       criterion_p_hybrid},
      {"5 q-hybrid rows and central intervals", criterion_q_hybrid},
      {"6 flat-prior rows", criterion_flat},
      {"7 property suites (symmetry, bounds, roundtrips, pooling)",
       criterion_properties},
      {"8 combined row of the large published studies: not reproduced by "
       "design",
       criterion_not_reproducible},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    Criterion c;
    c.label = e.label;
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    std::printf("%s  criterion %s\n", c.ok ? "PASS" : "FAIL", c.label.c_str());
    for (const std::string& f : c.failures)
      std::printf("      %s\n", f.c_str());
    if (!c.ok) ++failures;
  }
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
