#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;       // unreadable/malformed CSV, bad args
inline constexpr int kExitDegenerate = 3;  // zero or full table cell
inline constexpr int kExitGammaFloor = 4;  // gamma below lambda/(1+lambda)

enum class Format { table, csv, json };

struct AnalyzeConfig {
  std::string input_path;  // empty: bundled studies
  std::string study;
  std::string outcome;
  double theta0 = 0.0;
  double epsilon = 0.1;
  std::string method;  // flat | normal-g | two-step | p-hybrid | q-hybrid
  std::vector<double> alpha;
  std::vector<double> gamma;
  std::vector<double> beta;
  double g_sd = 1.0;
  double level = 0.95;
  Format format = Format::table;
};

struct MetaConfig {
  std::string input_path;  // empty: bundled studies
  double level = 0.95;
  std::string svg_path;  // empty: no plot
  Format format = Format::table;
};

struct QcurveConfig {
  std::string input_path;
  std::string study;
  std::string outcome;
  double theta0 = 0.0;
  double epsilon = 0.1;
  std::string svg_path;
};

int cmd_analyze(const AnalyzeConfig& cfg, std::ostream& out,
                std::ostream& err);
int cmd_reproduce(int table_id, std::ostream& out, std::ostream& err);
int cmd_meta(const MetaConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_qcurve(const QcurveConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace specint::cli
