#pragma once

#include <stdexcept>
#include <string>

namespace staircase {

// Base of every error thrown by the library. `kind()` is a stable tag used
// in JSONL records and by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define STAIRCASE_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

STAIRCASE_DEFINE_ERROR(DimensionMismatch)
STAIRCASE_DEFINE_ERROR(InvalidDirection)
STAIRCASE_DEFINE_ERROR(NotOnSameLine)
STAIRCASE_DEFINE_ERROR(NotDisjoint)
STAIRCASE_DEFINE_ERROR(UnsupportedCase)
STAIRCASE_DEFINE_ERROR(BadHypotheses)
STAIRCASE_DEFINE_ERROR(InternalContradiction)
STAIRCASE_DEFINE_ERROR(EmptyLine)
STAIRCASE_DEFINE_ERROR(SingularQ)
STAIRCASE_DEFINE_ERROR(NotFound)
STAIRCASE_DEFINE_ERROR(FieldTooSmall)
STAIRCASE_DEFINE_ERROR(DuplicatePoints)
STAIRCASE_DEFINE_ERROR(MatrixTooLarge)
STAIRCASE_DEFINE_ERROR(InvalidPoint)

#undef STAIRCASE_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("ParseError", what + " at line " + std::to_string(line) +
                                ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace staircase
