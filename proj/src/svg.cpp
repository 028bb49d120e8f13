#include "specint/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "specint/inference.hpp"
#include "specint/normal.hpp"

namespace specint {

namespace {

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

const char* kHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
    "viewBox=\"0 0 %d %d\" font-family=\"monospace\" font-size=\"12\">\n";

}  // namespace

std::string forest_svg(std::span<const ForestRow> rows) {
  const int width = 720;
  const int row_pitch = 28;
  const int top = 52;
  const int height = top + row_pitch * static_cast<int>(rows.size()) + 46;
  const double x0 = 230.0, x1 = 620.0;

  double lo = 1.0, hi = 1.0;
  for (const ForestRow& r : rows) {
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  const double llo = std::log(lo) - 0.08, lhi = std::log(hi) + 0.08;
  auto xpos = [&](double odds) {
    return x0 + (std::log(odds) - llo) / (lhi - llo) * (x1 - x0);
  };

  std::string s = fmt(kHeader, width, height, width, height);
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += fmt("<text x=\"%g\" y=\"20\" font-weight=\"bold\">Odds ratio "
           "(log scale)</text>\n", x0);

  // Axis with ticks at conventional odds-ratio values.
  const double axis_y = top + row_pitch * static_cast<double>(rows.size()) + 8;
  s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"black\"/>\n", x0, axis_y, x1, axis_y);
  for (double tick : {0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    if (tick < lo * 0.9 || tick > hi * 1.1) continue;
    const double x = xpos(tick);
    s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"black\"/>\n", x, axis_y, x, axis_y + 5);
    s += fmt("<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%g</text>\n",
             x, axis_y + 18, tick);
  }

  // Reference line at no effect.
  const double xref = xpos(1.0);
  s += fmt("<line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
           xref, top - 10, xref, axis_y);

  int i = 0;
  for (const ForestRow& r : rows) {
    const double y = top + row_pitch * i + row_pitch / 2.0;
    const double xl = xpos(r.lo), xh = xpos(r.hi), xc = xpos(r.odds_ratio);
    s += fmt("<text x=\"10\" y=\"%.2f\">%s</text>\n", y + 4, r.label.c_str());
    s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
             "stroke=\"black\"/>\n", xl, y, xh, y);
    if (r.label == "Combined") {
      s += fmt("<polygon points=\"%.2f,%.2f %.2f,%.2f %.2f,%.2f %.2f,%.2f\" "
               "fill=\"black\"/>\n",
               xc - 7.0, y, xc, y - 6.0, xc + 7.0, y, xc, y + 6.0);
    } else {
      s += fmt("<rect x=\"%.2f\" y=\"%.2f\" width=\"8\" height=\"8\" "
               "fill=\"black\"/>\n", xc - 4.0, y - 4.0);
    }
    s += fmt("<text x=\"%.2f\" y=\"%.2f\">%.3f (%.3f, %.3f)</text>\n",
             x1 + 12.0, y + 4, r.odds_ratio, r.lo, r.hi);
    ++i;
  }
  s += "</svg>\n";
  return s;
}

std::string qcurve_svg(const NormalLikelihood& lik,
                       const SpecialInterval& interval) {
  const int width = 720, height = 460;
  const double x0 = 70.0, x1 = 680.0;
  const double curve_y0 = 40.0, curve_y1 = 250.0;
  const double dens_y0 = 290.0, dens_y1 = 420.0;
  const int samples = 201;

  const double mu_lo = lik.estimate() - 4.0 * lik.se();
  const double mu_hi = lik.estimate() + 4.0 * lik.se();
  auto xpos = [&](double mu) {
    return x0 + (mu - mu_lo) / (mu_hi - mu_lo) * (x1 - x0);
  };

  std::vector<double> qs(samples);
  double qmax = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / (samples - 1);
    qs[i] = q_value(lik, interval, mu);
    qmax = std::max(qmax, qs[i]);
  }
  const double marked_mu = interval.upper();
  const double marked_q = q_value(lik, interval, marked_mu);
  qmax = std::max(qmax, marked_q) * 1.05;
  auto ypos = [&](double q) {
    return curve_y1 - q / qmax * (curve_y1 - curve_y0);
  };

  std::string s = fmt(kHeader, width, height, width, height);
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += fmt("<text x=\"%g\" y=\"22\" font-weight=\"bold\">q(mu*) against "
           "mu*</text>\n", x0);

  s += "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (int i = 0; i < samples; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / (samples - 1);
    s += fmt("%.2f,%.2f ", xpos(mu), ypos(qs[i]));
  }
  s += "\"/>\n";

  // Marked value at the upper interval limit.
  const double mx = xpos(marked_mu), my = ypos(marked_q);
  s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
           mx, curve_y1, mx, my);
  s += fmt("<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n", mx, my);
  s += fmt("<text x=\"%.2f\" y=\"%.2f\">Q = %.4f at mu* = %.4g</text>\n",
           mx + 10.0, my - 8.0, marked_q, marked_mu);
  s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"black\"/>\n", x0, curve_y1, x1, curve_y1);

  // Sampling density under mu* = upper limit; the shaded tails beyond
  // theta0 +- |estimate - theta0| are what the marked q measures.
  const double d = std::fabs(lik.estimate() - interval.theta0());
  const double tl = interval.theta0() - d, tr = interval.theta0() + d;
  const double dmax = normal_pdf(marked_mu, marked_mu, lik.se()) * 1.08;
  auto dy = [&](double v) { return dens_y1 - v / dmax * (dens_y1 - dens_y0); };
  auto dens = [&](double t) { return normal_pdf(t, marked_mu, lik.se()); };

  s += fmt("<text x=\"%g\" y=\"%.2f\">sampling density at mu* = %.4g, "
           "tails beyond theta0 +- %.4g shaded</text>\n",
           x0, dens_y0 - 10.0, marked_mu, d);
  auto emit_region = [&](double a, double b, const char* style) {
    if (!(b > a)) return;
    std::string path = fmt("<path d=\"M %.2f %.2f ", xpos(a), dens_y1);
    for (int i = 0; i <= 80; ++i) {
      const double t = a + (b - a) * i / 80.0;
      path += fmt("L %.2f %.2f ", xpos(t), dy(dens(t)));
    }
    path += fmt("L %.2f %.2f Z\" %s/>\n", xpos(b), dens_y1, style);
    s += path;
  };
  emit_region(mu_lo, std::min(tl, mu_hi),
              "fill=\"silver\" stroke=\"none\"");
  emit_region(std::max(tr, mu_lo), mu_hi,
              "fill=\"silver\" stroke=\"none\"");
  s += "<polyline fill=\"none\" stroke=\"black\" points=\"";
  for (int i = 0; i < samples; ++i) {
    const double t = mu_lo + (mu_hi - mu_lo) * i / (samples - 1);
    s += fmt("%.2f,%.2f ", xpos(t), dy(dens(t)));
  }
  s += "\"/>\n";
  s += fmt("<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" "
           "stroke=\"black\"/>\n", x0, dens_y1, x1, dens_y1);
  s += "</svg>\n";
  return s;
}

}  // namespace specint
