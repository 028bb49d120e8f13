#pragma once

#include <span>
#include <string>

#include "specint/effects.hpp"

namespace specint {

// One row of a study CSV: identifying labels plus the four trial counts.
struct StudyRecord {
  std::string study;
  std::string outcome;
  long n_t;
  long e_t;
  long n_c;
  long e_c;

  TwoByTwoTable table() const { return TwoByTwoTable(n_t, e_t, n_c, e_c); }
  std::string label() const { return study + " " + outcome; }
};

/// The bundled antibiotic-vs-control trials (CLARIFY acute coronary
/// syndromes, CLARIFY myocardial infarction, STAMINA acute coronary
/// syndromes), so the reference analyses run without external files.
std::span<const StudyRecord> bundled_studies();

/// Matching record, or throws CsvError naming the missing pair.
const StudyRecord& find_study(std::span<const StudyRecord> records,
                              const std::string& study,
                              const std::string& outcome);

}  // namespace specint
