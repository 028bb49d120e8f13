#pragma once

#include <optional>
#include <string>
#include <utility>

#include "specint/mixture.hpp"
#include "specint/types.hpp"

namespace specint {

enum class Method { flat, normal_g, two_step, p_hybrid, q_hybrid };

std::string method_name(Method m);

// Which one-sided test applies: `lower` when the estimate sits at or below
// the interval's lower limit, `upper` when at or above its upper limit,
// `none` when it falls strictly inside (neither test carries evidence
// against the interval).
enum class Side { lower, upper, none };

std::string side_name(Side s);

// Quantities each method computed along the way; fields are set only where
// the method uses them.
struct Diagnostics {
  std::optional<double> p_value;
  std::optional<Side> side;
  std::optional<double> q_value;
  std::optional<double> lambda;
  std::optional<double> gamma_floor;
  std::optional<double> c_star;
  std::optional<double> m_bar_star;
  std::optional<double> m_inside;
  std::optional<double> g_sd;
};

// One method's answer: the probability assigned to the special interval,
// the probability of {theta >= theta0 - epsilon}, and the full post-data
// distribution.
struct MethodResult {
  Method method;
  double interval_prob;
  double prob_ge_lower;
  PosteriorMixture mixture;
  Diagnostics diagnostics;
};

/// Posterior under a flat improper prior: N(estimate, se^2).
MethodResult flat_posterior(const NormalLikelihood& lik,
                            const SpecialInterval& interval);

/// Posterior probability of the interval when the prior places mass alpha
/// on it (uniform within; a point mass when epsilon = 0) and spreads the
/// rest as N(theta0, g_sd^2) conditioned to lie outside the interval.
/// Tends to 1 as g_sd grows, whatever the data say; kept as a reference
/// point for why the sensitivity-bound method exists.
double standard_bayes_normal_g(const NormalLikelihood& lik,
                               const SpecialInterval& interval, double alpha,
                               double g_sd);

/// Full post-data distribution for the same prior.
MethodResult normal_g_posterior(const NormalLikelihood& lik,
                                const SpecialInterval& interval, double alpha,
                                double g_sd);

/// Mean height of the likelihood over the interval; the likelihood value at
/// theta0 when epsilon = 0.
double mean_likelihood_inside(const NormalLikelihood& lik,
                              const SpecialInterval& interval);

/// Mean height of the likelihood over the shell
/// [theta0-c, lower] U [upper, theta0+c].  Requires c > epsilon.
double shell_mean_likelihood(const NormalLikelihood& lik,
                             const SpecialInterval& interval, double c);

struct ShellOptimum {
  double c_star;
  double m_bar_star;
};

/// Maximises shell_mean_likelihood over c: coarse 512-point grid up to
/// |estimate - theta0| + 10 se, then golden-section refinement around the
/// best grid point.  The grid pass guards against plateaus; unimodality in
/// c is not assumed.
ShellOptimum optimize_shell(const NormalLikelihood& lik,
                            const SpecialInterval& interval);

/// Sensitivity lower bound on the interval's posterior probability over all
/// priors that place mass alpha on the interval (uniform within) and spread
/// the rest with any density symmetric about theta0 and non-increasing in
/// |theta - theta0|:
///
///     P_L = alpha m_h / (alpha m_h + (1 - alpha) m_bar*)
///
/// where m_h = mean_likelihood_inside and m_bar* the optimized shell mean.
/// The returned distribution keeps the diffuse-prior conditional posteriors
/// on each side, so the outside mass 1 - P_L splits in proportion to the
/// flat posterior's below/above masses.
MethodResult two_step(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double alpha);

/// Closed-form bound alpha * M_inside / M_limits, valid when the likelihood
/// peaks inside the interval; M_limits is the mean likelihood height at the
/// two interval endpoints.  Advisory: it is the printed simplification of
/// the optimizer's c -> epsilon limit and the two disagree except when the
/// ratio is one; optimize_shell/two_step are authoritative.
double endpoint_ratio_lower_bound(const NormalLikelihood& lik,
                                  const SpecialInterval& interval,
                                  double alpha);

struct OneSidedP {
  double p;
  Side side;
};

/// One-sided P value against the nearer interval limit, and which side it
/// tests; side == none when the estimate falls strictly inside the interval
/// (p is then meaningless and set to NaN).
OneSidedP one_sided_p(const NormalLikelihood& lik,
                      const SpecialInterval& interval);

/// Smallest admissible gamma, lambda / (1 + lambda), where lambda is the
/// ratio of far-side to near-side mass in the outside-conditional
/// posterior.  Undefined when one_sided_p reports side == none.
double gamma_floor(const NormalLikelihood& lik,
                   const SpecialInterval& interval);

/// Hybrid calibrated by the one-sided P value: the analyst assigns gamma as
/// the post-data probability of the null side, and the interval receives
/// gamma - lambda (1 - gamma).  Throws GammaFloorError below the floor and
/// NoSidedEvidenceError when side == none (use prior_carryover instead).
MethodResult p_hybrid(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double gamma);

/// Fallback when neither one-sided test applies: the interval keeps the
/// prior probability unchanged, with no corroboration bonus; the outside
/// mass splits in proportion to the flat posterior.
MethodResult prior_carryover(const NormalLikelihood& lik,
                             const SpecialInterval& interval,
                             double prior_prob);

/// Tail mass beyond +-|estimate - theta0| around theta0 under
/// N(mu_star, se^2).  Generalizes the two-sided P value: at mu_star =
/// theta0 with epsilon = 0 it equals 2 (1 - Phi(|z|)).
double q_value(const NormalLikelihood& lik, const SpecialInterval& interval,
               double mu_star);

/// Hybrid calibrated by the Q value: the analyst assigns beta directly as
/// the post-data probability of the interval; the outside mass splits in
/// proportion to the flat posterior.
MethodResult q_hybrid(const NormalLikelihood& lik,
                      const SpecialInterval& interval, double beta);

}  // namespace specint
