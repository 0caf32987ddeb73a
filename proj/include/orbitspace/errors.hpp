#pragma once

#include <stdexcept>
#include <string>

namespace orbitspace {

// Contract breaches are exceptions. Validation findings on orbit data are
// reported as values (ValidationReport), never thrown.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllegalDataError : Error { using Error::Error; };
struct NotApplicableError : Error { using Error::Error; };
struct InvalidMoveError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct BothEvenError : Error { using Error::Error; };
struct NotEffectiveError : Error { using Error::Error; };
struct IllegalT2DataError : Error { using Error::Error; };
struct IllegalSplitError : Error { using Error::Error; };
struct NotAdmissibleError : Error { using Error::Error; };

struct PipelineStuckError : Error {
  explicit PipelineStuckError(const std::string& why)
      : Error("pipeline stuck: " + why), reason(why) {}
  std::string reason;
};

struct ParseError : Error {
  ParseError(int line_, int column_, const std::string& what_)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(column_) + ": " + what_),
        line(line_), column(column_) {}
  int line;
  int column;
};

}  // namespace orbitspace
