#pragma once

#include <span>
#include <string>

#include "specint/meta.hpp"
#include "specint/types.hpp"

namespace specint {

/// Forest plot: one box-and-whisker row per study on a log-scaled
/// odds-ratio axis, reference line at OR = 1, combined row drawn as a
/// diamond.  Output bytes depend only on the rows.
std::string forest_svg(std::span<const ForestRow> rows);

/// Significance curve q(mu*) over mu* in [estimate - 4 se, estimate + 4 se]
/// with the value at mu* = theta0 + epsilon marked, and the sampling
/// density under that mu* drawn below with its two tail areas shaded.
/// Output bytes depend only on the inputs.
std::string qcurve_svg(const NormalLikelihood& lik,
                       const SpecialInterval& interval);

}  // namespace specint
