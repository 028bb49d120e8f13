#pragma once

#include <istream>
#include <string>
#include <vector>

#include "specint/datasets.hpp"

namespace specint {

// Fixed header `study,outcome,n_t,e_t,n_c,e_c`, UTF-8, comma-separated,
// no quoting.  Throws CsvError on any malformed content.
std::vector<StudyRecord> read_studies_csv(std::istream& in);
std::vector<StudyRecord> read_studies_csv_file(const std::string& path);

}  // namespace specint
