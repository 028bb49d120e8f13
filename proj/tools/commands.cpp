#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "specint/csv.hpp"
#include "specint/datasets.hpp"
#include "specint/effects.hpp"
#include "specint/errors.hpp"
#include "specint/inference.hpp"
#include "specint/meta.hpp"
#include "specint/oracle.hpp"
#include "specint/svg.hpp"

namespace specint::cli {

namespace {

std::string num(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ResultRow {
  std::string method;
  std::string hyper_name;  // empty for flat
  std::optional<double> hyper;
  std::optional<double> significance;
  std::string significance_text;  // "-" when not applicable
  double interval_prob = 0.0;
  double prob_ge_lower = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  Diagnostics diag;
  int interval_prob_decimals = 3;
  std::string interval_prob_mark;  // footnote tag in reproduce tables
};

ResultRow make_row(const MethodResult& res, const std::string& hyper_name,
                   std::optional<double> hyper, double level) {
  ResultRow row;
  row.method = method_name(res.method);
  row.hyper_name = hyper_name;
  row.hyper = hyper;
  const auto ci = res.mixture.central_interval(level);
  row.ci_lo = std::exp(ci.first);
  row.ci_hi = std::exp(ci.second);
  row.interval_prob = res.interval_prob;
  row.prob_ge_lower = res.prob_ge_lower;
  row.diag = res.diagnostics;
  if (res.diagnostics.p_value) {
    row.significance = res.diagnostics.p_value;
    row.significance_text = "P=" + num(*res.diagnostics.p_value, 4);
  } else if (res.diagnostics.q_value) {
    row.significance = res.diagnostics.q_value;
    row.significance_text = "Q=" + num(*res.diagnostics.q_value, 4);
  } else {
    row.significance_text = "-";
  }
  return row;
}

void render_table(const std::vector<ResultRow>& rows, std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "%-10s %-12s %-16s %-14s %-12s %s\n",
                "method", "assigned", "significance", "P(in interval)",
                "P(>= lower)", "95% interval (OR)");
  out << line;
  for (const ResultRow& r : rows) {
    std::string hyper = "-";
    if (r.hyper) hyper = r.hyper_name + "=" + num(*r.hyper, 4);
    const std::string in_cell =
        num(r.interval_prob, r.interval_prob_decimals) + r.interval_prob_mark;
    std::snprintf(line, sizeof(line), "%-10s %-12s %-16s %-14s %-12s (%s, %s)\n",
                  r.method.c_str(), hyper.c_str(), r.significance_text.c_str(),
                  in_cell.c_str(), num(r.prob_ge_lower, 3).c_str(),
                  num(r.ci_lo, 3).c_str(), num(r.ci_hi, 3).c_str());
    out << line;
  }
}

void render_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "method,hyper,significance,interval_prob,prob_ge_lower,ci_lo,ci_hi\n";
  for (const ResultRow& r : rows) {
    out << r.method << ',' << (r.hyper ? full(*r.hyper) : "") << ','
        << (r.significance ? full(*r.significance) : "") << ','
        << full(r.interval_prob) << ',' << full(r.prob_ge_lower) << ','
        << full(r.ci_lo) << ',' << full(r.ci_hi) << '\n';
  }
}

nlohmann::json diagnostics_json(const Diagnostics& d) {
  nlohmann::json j = nlohmann::json::object();
  if (d.p_value) j["p_value"] = *d.p_value;
  if (d.side) j["side"] = side_name(*d.side);
  if (d.q_value) j["q_value"] = *d.q_value;
  if (d.lambda) j["lambda"] = *d.lambda;
  if (d.gamma_floor) j["gamma_floor"] = *d.gamma_floor;
  if (d.c_star) j["c_star"] = *d.c_star;
  if (d.m_bar_star) j["m_bar_star"] = *d.m_bar_star;
  if (d.m_inside) j["m_inside"] = *d.m_inside;
  if (d.g_sd) j["g_sd"] = *d.g_sd;
  return j;
}

void render_json(const std::vector<ResultRow>& rows, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRow& r : rows) {
    nlohmann::json j;
    j["method"] = r.method;
    j["hyper"] = r.hyper ? nlohmann::json(*r.hyper) : nlohmann::json();
    j["significance"] =
        r.significance ? nlohmann::json(*r.significance) : nlohmann::json();
    j["interval_prob"] = r.interval_prob;
    j["prob_ge_lower"] = r.prob_ge_lower;
    j["ci_lo"] = r.ci_lo;
    j["ci_hi"] = r.ci_hi;
    j["diagnostics"] = diagnostics_json(r.diag);
    arr.push_back(j);
  }
  out << arr.dump(2) << '\n';
}

void render(const std::vector<ResultRow>& rows, Format format,
            std::ostream& out) {
  switch (format) {
    case Format::table: render_table(rows, out); break;
    case Format::csv: render_csv(rows, out); break;
    case Format::json: render_json(rows, out); break;
  }
}

std::vector<StudyRecord> load_records(const std::string& input_path) {
  if (input_path.empty()) {
    const auto bundled = bundled_studies();
    return {bundled.begin(), bundled.end()};
  }
  return read_studies_csv_file(input_path);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const GammaFloorError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGammaFloor;
  } catch (const DegenerateTableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const CsvError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int cmd_analyze(const AnalyzeConfig& cfg, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto records = load_records(cfg.input_path);
    const StudyRecord& rec = find_study(records, cfg.study, cfg.outcome);
    const NormalLikelihood lik = likelihood(rec.table());
    const SpecialInterval interval(cfg.theta0, cfg.epsilon);

    std::vector<ResultRow> rows;
    if (cfg.method == "flat") {
      rows.push_back(
          make_row(flat_posterior(lik, interval), "", std::nullopt, cfg.level));
    } else if (cfg.method == "two-step") {
      if (cfg.alpha.empty())
        throw std::invalid_argument("two-step needs --alpha values");
      for (double a : cfg.alpha)
        rows.push_back(make_row(two_step(lik, interval, a), "alpha", a,
                                cfg.level));
    } else if (cfg.method == "normal-g") {
      if (cfg.alpha.empty())
        throw std::invalid_argument("normal-g needs --alpha values");
      for (double a : cfg.alpha)
        rows.push_back(make_row(normal_g_posterior(lik, interval, a, cfg.g_sd),
                                "alpha", a, cfg.level));
    } else if (cfg.method == "p-hybrid") {
      if (cfg.gamma.empty())
        throw std::invalid_argument("p-hybrid needs --gamma values");
      for (double g : cfg.gamma) {
        try {
          rows.push_back(make_row(p_hybrid(lik, interval, g), "gamma", g,
                                  cfg.level));
        } catch (const NoSidedEvidenceError&) {
          // Estimate inside the interval: the assigned probability carries
          // over unchanged.
          ResultRow row = make_row(prior_carryover(lik, interval, g), "gamma",
                                   g, cfg.level);
          row.significance_text = "none";
          rows.push_back(std::move(row));
        }
      }
    } else if (cfg.method == "q-hybrid") {
      if (cfg.beta.empty())
        throw std::invalid_argument("q-hybrid needs --beta values");
      for (double b : cfg.beta)
        rows.push_back(
            make_row(q_hybrid(lik, interval, b), "beta", b, cfg.level));
    } else {
      throw std::invalid_argument("unknown method '" + cfg.method + "'");
    }
    render(rows, cfg.format, out);
    return kExitOk;
  });
}

namespace {

struct ReproduceSpec {
  int id;
  const char* study;
  const char* outcome;
  const char* title;
  std::vector<double> alphas;
  std::vector<double> gammas;
  std::vector<double> betas;
  std::vector<double> direct;  // directly assigned interval probabilities
  int flat_interval_decimals;
};

const ReproduceSpec kTables[] = {
    {1, "CLARIFY", "ACS", "CLARIFY study, acute coronary syndromes",
     {0.5, 0.8}, {0.05, 0.02, 0.01}, {0.05, 0.01}, {}, 3},
    {2, "CLARIFY", "MI", "CLARIFY study, myocardial infarction",
     {0.5, 0.8}, {0.20, 0.10, 0.05}, {0.20, 0.05}, {}, 4},
    {3, "STAMINA", "ACS", "STAMINA study, acute coronary syndromes",
     {0.5, 0.8}, {}, {}, {0.5, 0.8}, 3},
};

}  // namespace

int cmd_reproduce(int table_id, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const ReproduceSpec* spec = nullptr;
    for (const ReproduceSpec& t : kTables)
      if (t.id == table_id) spec = &t;
    if (!spec)
      throw std::invalid_argument("reproduce: table id must be 1, 2 or 3");

    const StudyRecord& rec =
        find_study(bundled_studies(), spec->study, spec->outcome);
    const NormalLikelihood lik = likelihood(rec.table());
    const SpecialInterval interval(0.0, 0.1);
    const double level = 0.95;

    out << "Table " << spec->id << ". " << spec->title << "\n";
    out << "data: n_t=" << rec.n_t << ", e_t=" << rec.e_t
        << ", n_c=" << rec.n_c << ", e_c=" << rec.e_c << "\n";
    out << "log odds ratio interval: [-0.1, 0.1]; level 0.95\n\n";

    std::vector<ResultRow> rows;
    std::string footnote;

    ResultRow flat = make_row(flat_posterior(lik, interval), "", std::nullopt,
                              level);
    flat.interval_prob_decimals = spec->flat_interval_decimals;
    rows.push_back(std::move(flat));

    for (double a : spec->alphas)
      rows.push_back(make_row(two_step(lik, interval, a), "alpha", a, level));
    for (double g : spec->gammas) {
      ResultRow row = make_row(p_hybrid(lik, interval, g), "gamma", g, level);
      if (spec->id == 1 && g == 0.01) {
        row.interval_prob_mark = " [a]";
        footnote =
            "[a] computed value; the corresponding cell in the published\n"
            "    analysis reads 0.099, which is inconsistent with the\n"
            "    assigned probability 0.01 and the tail-mass identity.\n";
      }
      rows.push_back(std::move(row));
    }
    for (double b : spec->betas)
      rows.push_back(make_row(q_hybrid(lik, interval, b), "beta", b, level));
    for (double p : spec->direct) {
      // Merged hybrid rows: the analyst assigns the interval probability
      // itself, so the P-value and Q-value readings coincide.
      ResultRow row = make_row(q_hybrid(lik, interval, p), "prob", p, level);
      row.method = "p/q-hybrid";
      const OneSidedP os = one_sided_p(lik, interval);
      row.significance_text = "P=" + num(os.p, 4) + " Q=" +
                              num(q_value(lik, interval, interval.upper()), 4);
      rows.push_back(std::move(row));
    }

    render_table(rows, out);
    if (!footnote.empty()) out << "\n" << footnote;
    return kExitOk;
  });
}

int cmd_meta(const MetaConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto records = load_records(cfg.input_path);
    std::vector<StudyEffect> effects;
    effects.reserve(records.size());
    for (const StudyRecord& r : records) {
      const NormalLikelihood lik = likelihood(r.table());
      effects.push_back({r.label(), lik.estimate(), lik.se()});
    }
    const RandomEffectsResult combined = dersimonian_laird(effects, cfg.level);
    const std::vector<ForestRow> rows =
        forest_rows(effects, combined, cfg.level);

    if (cfg.format == Format::json) {
      nlohmann::json j;
      j["rows"] = nlohmann::json::array();
      for (const ForestRow& r : rows)
        j["rows"].push_back({{"label", r.label},
                             {"odds_ratio", r.odds_ratio},
                             {"ci_lo", r.lo},
                             {"ci_hi", r.hi}});
      j["pooled_log_or"] = combined.pooled;
      j["pooled_se"] = combined.pooled_se;
      j["tau2"] = combined.tau2;
      j["q_stat"] = combined.q_stat;
      out << j.dump(2) << '\n';
    } else {
      char line[160];
      std::snprintf(line, sizeof(line), "%-16s %-8s %s\n", "study", "OR",
                    "interval");
      out << line;
      for (const ForestRow& r : rows) {
        std::snprintf(line, sizeof(line), "%-16s %-8s (%s, %s)\n",
                      r.label.c_str(), num(r.odds_ratio, 3).c_str(),
                      num(r.lo, 3).c_str(), num(r.hi, 3).c_str());
        out << line;
      }
      out << "tau2=" << num(combined.tau2, 4)
          << " Q=" << num(combined.q_stat, 4)
          << " pooled log OR=" << num(combined.pooled, 4) << " (se "
          << num(combined.pooled_se, 4) << ")\n";
    }

    if (!cfg.svg_path.empty()) {
      std::ofstream svg(cfg.svg_path, std::ios::binary);
      if (!svg) throw CsvError("cannot write '" + cfg.svg_path + "'");
      svg << forest_svg(rows);
    }
    return kExitOk;
  });
}

int cmd_qcurve(const QcurveConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const auto records = load_records(cfg.input_path);
    const StudyRecord& rec = find_study(records, cfg.study, cfg.outcome);
    const NormalLikelihood lik = likelihood(rec.table());
    const SpecialInterval interval(cfg.theta0, cfg.epsilon);

    const double marked = q_value(lik, interval, interval.upper());
    out << "q(theta0+epsilon) = " << num(marked, 4) << '\n';

    if (!cfg.svg_path.empty()) {
      std::ofstream svg(cfg.svg_path, std::ios::binary);
      if (!svg) throw CsvError("cannot write '" + cfg.svg_path + "'");
      svg << qcurve_svg(lik, interval);
    }
    return kExitOk;
  });
}

}  // namespace specint::cli
