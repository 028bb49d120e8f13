#include "specint/datasets.hpp"

#include <array>

#include "specint/errors.hpp"

namespace specint {

namespace {
const std::array<StudyRecord, 3> kBundled = {{
    {"CLARIFY", "ACS", 74, 10, 74, 25},
    {"CLARIFY", "MI", 74, 5, 74, 14},
    {"STAMINA", "ACS", 111, 23, 107, 31},
}};
}  // namespace

std::span<const StudyRecord> bundled_studies() { return kBundled; }

const StudyRecord& find_study(std::span<const StudyRecord> records,
                              const std::string& study,
                              const std::string& outcome) {
  for (const StudyRecord& r : records)
    if (r.study == study && r.outcome == outcome) return r;
  throw CsvError("no record for study '" + study + "' with outcome '" +
                 outcome + "'");
}

}  // namespace specint
