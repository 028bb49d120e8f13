#pragma once

#include <stdexcept>
#include <string>

namespace specint {

// A 2x2 table with an empty or full cell; the log odds ratio or its
// variance is not finite.
class DegenerateTableError : public std::domain_error {
 public:
  explicit DegenerateTableError(const std::string& what)
      : std::domain_error(what) {}
};

// gamma below the consistency floor lambda / (1 + lambda).
class GammaFloorError : public std::domain_error {
 public:
  GammaFloorError(const std::string& what, double floor)
      : std::domain_error(what), floor_(floor) {}
  double floor() const { return floor_; }

 private:
  double floor_;
};

// Neither one-sided test applies (the estimate falls strictly inside the
// special interval); the caller should carry the prior probability over.
class NoSidedEvidenceError : public std::domain_error {
 public:
  explicit NoSidedEvidenceError(const std::string& what)
      : std::domain_error(what) {}
};

// Malformed study CSV input.
class CsvError : public std::runtime_error {
 public:
  explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace specint
