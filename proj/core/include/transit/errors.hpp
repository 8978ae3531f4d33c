#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transit {

enum class ErrorKind {
  // ingest
  Io,
  MissingColumn,
  BadValue,
  DuplicateId,
  EmptyLineSet,
  UnknownStationRef,
  NonMonotoneSequence,
  BranchTooShort,
  RepeatedStation,
  DuplicateRecord,
  BadMode,
  NegativeCount,
  // graph_core / construct
  SelfLoop,
  UnknownNode,
  UnknownEdge,
  EmptyGraph,
  EmptyAccessibleSet,
  // metrics
  TooSmall,
  InsufficientSupport,
  // socio
  InsufficientData,
  ZeroVariance,
  UnknownField,
  // a result violated a documented invariant; always a bug
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 protected:
  struct Preformatted {};
  Error(Preformatted, ErrorKind kind, const std::string& what);

 private:
  ErrorKind kind_;
};

// Error tied to one row of an input file. line is the 1-based physical line
// of the row (the header is line 1); 0 when the whole file is at fault.
class InputError : public Error {
 public:
  InputError(ErrorKind kind, std::string file, std::size_t line, const std::string& detail);

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string file_;
  std::size_t line_;
  std::string detail_;
};

}  // namespace transit
