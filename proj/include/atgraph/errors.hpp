#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atgraph {

// Base type for all validation and search failures raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text parsers; line is 1-based (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Raised when an exact search runs out of its node budget. Carries the
// bracket [lower, upper] established before the search was cut off.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(int lower, int upper, std::int64_t spent)
      : Error("search budget exceeded; value in [" + std::to_string(lower) +
              ", " + std::to_string(upper) + "] after " +
              std::to_string(spent) + " nodes"),
        lower_(lower),
        upper_(upper),
        spent_(spent) {}
  int lower() const { return lower_; }
  int upper() const { return upper_; }
  std::int64_t spent() const { return spent_; }

 private:
  int lower_;
  int upper_;
  std::int64_t spent_;
};

}  // namespace atgraph
