#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "specint/meta.hpp"
#include "specint/types.hpp"

// Brute-force verifiers shipped with the library so the acceptance suite
// runs from a clean checkout.  Slow and simple on purpose; none of this is
// on the main inference path.
namespace specint::oracle {

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance
/// `tol`.  Throws std::runtime_error if the recursion depth limit is hit
/// before convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 48);

/// Posterior mass of the special interval under an arbitrary prior
/// density, evaluated by quadrature of likelihood * prior with no
/// conjugacy shortcuts.  `knots` lists extra subdivision points (prior
/// discontinuities or spikes).
double quadrature_posterior(const NormalLikelihood& lik,
                            const std::function<double(double)>& prior,
                            const SpecialInterval& interval,
                            std::vector<double> knots = {});

/// Minimum posterior probability of the interval, with prior mass alpha on
/// it, over mixtures of uniform-shell priors centred at theta0 (the
/// extreme points of the symmetric non-increasing class).  Scans
/// `grid_resolution` single shells plus `random_mixtures` random convex
/// combinations of them.  By linearity of the marginal in the prior the
/// minimum sits at a single shell, so this can never fall materially below
/// the two-step bound.
double min_prob_over_shell_mixtures(const NormalLikelihood& lik,
                                    const SpecialInterval& interval,
                                    double alpha, int grid_resolution,
                                    int random_mixtures = 200,
                                    std::uint64_t seed = 20240911u);

/// Step-by-step DerSimonian-Laird, coded independently of
/// meta::dersimonian_laird.
RandomEffectsResult dersimonian_laird_reference(
    std::span<const StudyEffect> studies, double level);

}  // namespace specint::oracle
