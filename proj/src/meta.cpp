#include "specint/meta.hpp"

#include <cmath>
#include <stdexcept>

#include "specint/normal.hpp"

namespace specint {

RandomEffectsResult dersimonian_laird(std::span<const StudyEffect> studies,
                                      double level) {
  if (studies.empty())
    throw std::invalid_argument("dersimonian_laird: no studies");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("dersimonian_laird: level not in (0, 1)");
  for (const StudyEffect& s : studies)
    if (!(s.se > 0.0))
      throw std::invalid_argument("dersimonian_laird: se must be > 0 (" +
                                  s.label + ")");

  const std::size_t k = studies.size();
  double sw = 0.0, swy = 0.0, sw2 = 0.0;
  for (const StudyEffect& s : studies) {
    const double w = 1.0 / (s.se * s.se);
    sw += w;
    swy += w * s.estimate;
    sw2 += w * w;
  }
  const double fixed_mean = swy / sw;

  double q = 0.0;
  for (const StudyEffect& s : studies) {
    const double w = 1.0 / (s.se * s.se);
    const double d = s.estimate - fixed_mean;
    q += w * d * d;
  }

  double tau2 = 0.0;
  if (k > 1) {
    const double denom = sw - sw2 / sw;
    if (denom > 0.0)
      tau2 = std::max(0.0, (q - static_cast<double>(k - 1)) / denom);
  }

  double sws = 0.0, swsy = 0.0;
  for (const StudyEffect& s : studies) {
    const double w = 1.0 / (s.se * s.se + tau2);
    sws += w;
    swsy += w * s.estimate;
  }
  const double pooled = swsy / sws;
  const double pooled_se = 1.0 / std::sqrt(sws);
  const double z = std_normal_quantile(1.0 - 0.5 * (1.0 - level));

  return RandomEffectsResult{
      pooled, pooled_se, tau2, q,
      {std::exp(pooled - z * pooled_se), std::exp(pooled + z * pooled_se)}};
}

std::vector<ForestRow> forest_rows(std::span<const StudyEffect> studies,
                                   const RandomEffectsResult& combined,
                                   double level) {
  const double z = std_normal_quantile(1.0 - 0.5 * (1.0 - level));
  std::vector<ForestRow> rows;
  rows.reserve(studies.size() + 1);
  for (const StudyEffect& s : studies)
    rows.push_back({s.label, std::exp(s.estimate),
                    std::exp(s.estimate - z * s.se),
                    std::exp(s.estimate + z * s.se)});
  rows.push_back({"Combined", std::exp(combined.pooled), combined.ci.first,
                  combined.ci.second});
  return rows;
}

}  // namespace specint
