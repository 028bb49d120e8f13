#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

const std::map<std::string, specint::cli::Format> kFormats = {
    {"table", specint::cli::Format::table},
    {"csv", specint::cli::Format::csv},
    {"json", specint::cli::Format::json},
};

}  // namespace

int main(int argc, char** argv) {
  using namespace specint::cli;

  CLI::App app{
      "Post-data probabilities for a parameter whose narrow special "
      "interval carries substantial prior belief"};
  app.require_subcommand(1);

  AnalyzeConfig acfg;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Run one inference method over a study, sweeping the "
                 "assigned probability");
  analyze->add_option("--input", acfg.input_path,
                      "Study CSV (header study,outcome,n_t,e_t,n_c,e_c); "
                      "bundled studies when omitted");
  analyze->add_option("--study", acfg.study, "Study name")->required();
  analyze->add_option("--outcome", acfg.outcome, "Outcome name")->required();
  analyze->add_option("--theta0", acfg.theta0, "Interval centre (log OR)")
      ->capture_default_str();
  analyze->add_option("--epsilon", acfg.epsilon, "Interval half-width")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  analyze
      ->add_option("--method", acfg.method,
                   "flat | normal-g | two-step | p-hybrid | q-hybrid")
      ->required();
  analyze->add_option("--alpha", acfg.alpha,
                      "Prior interval probabilities (two-step, normal-g)")
      ->delimiter(',');
  analyze->add_option("--gamma", acfg.gamma,
                      "Assigned P(theta >= lower) values (p-hybrid)")
      ->delimiter(',');
  analyze->add_option("--beta", acfg.beta,
                      "Assigned interval probabilities (q-hybrid)")
      ->delimiter(',');
  analyze->add_option("--g-sd", acfg.g_sd, "Outside-prior sd (normal-g)")
      ->capture_default_str();
  analyze->add_option("--level", acfg.level, "Central interval level")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  analyze->add_option("--format", acfg.format, "table, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  int table_id = 1;
  CLI::App* reproduce = app.add_subcommand(
      "reproduce", "Recompute one of the bundled reference tables");
  reproduce->add_option("table", table_id, "Table id (1, 2 or 3)")
      ->required()
      ->check(CLI::Range(1, 3));

  MetaConfig mcfg;
  CLI::App* meta = app.add_subcommand(
      "meta", "Random-effects combination of study log odds ratios");
  meta->add_option("--input", mcfg.input_path, "Study CSV; bundled when omitted");
  meta->add_option("--level", mcfg.level, "Interval level")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  meta->add_option("--svg", mcfg.svg_path, "Write a forest plot here");
  meta->add_option("--format", mcfg.format, "table or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  QcurveConfig qcfg;
  CLI::App* qcurve = app.add_subcommand(
      "qcurve", "Significance curve q(mu*) for a study, with the value at "
                "the upper interval limit marked");
  qcurve->add_option("--input", qcfg.input_path, "Study CSV; bundled when omitted");
  qcurve->add_option("--study", qcfg.study, "Study name")->required();
  qcurve->add_option("--outcome", qcfg.outcome, "Outcome name")->required();
  qcurve->add_option("--theta0", qcfg.theta0, "Interval centre (log OR)")
      ->capture_default_str();
  qcurve->add_option("--epsilon", qcfg.epsilon, "Interval half-width")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  qcurve->add_option("--svg", qcfg.svg_path, "Write the curve here")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return cmd_analyze(acfg, std::cout, std::cerr);
  if (reproduce->parsed()) return cmd_reproduce(table_id, std::cout, std::cerr);
  if (meta->parsed()) return cmd_meta(mcfg, std::cout, std::cerr);
  if (qcurve->parsed()) return cmd_qcurve(qcfg, std::cout, std::cerr);
  return 1;
}
