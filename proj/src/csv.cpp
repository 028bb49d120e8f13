#include "specint/csv.hpp"

#include <fstream>
#include <sstream>

#include "specint/errors.hpp"

namespace specint {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

long parse_count(const std::string& s, const std::string& column, int lineno) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw CsvError("line " + std::to_string(lineno) + ": column '" + column +
                   "' is not a count: '" + s + "'");
  if (v < 0)
    throw CsvError("line " + std::to_string(lineno) + ": column '" + column +
                   "' is negative");
  return v;
}

}  // namespace

std::vector<StudyRecord> read_studies_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "study,outcome,n_t,e_t,n_c,e_c")
    throw CsvError("expected header 'study,outcome,n_t,e_t,n_c,e_c', got '" +
                   line + "'");

  std::vector<StudyRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 6)
      throw CsvError("line " + std::to_string(lineno) + ": expected 6 fields, got " +
                     std::to_string(f.size()));
    records.push_back({f[0], f[1], parse_count(f[2], "n_t", lineno),
                       parse_count(f[3], "e_t", lineno),
                       parse_count(f[4], "n_c", lineno),
                       parse_count(f[5], "e_c", lineno)});
  }
  if (records.empty()) throw CsvError("no study rows");
  return records;
}

std::vector<StudyRecord> read_studies_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open '" + path + "'");
  return read_studies_csv(in);
}

}  // namespace specint
