#include "transit/errors.hpp"

namespace transit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "Io";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::BadValue: return "BadValue";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::EmptyLineSet: return "EmptyLineSet";
    case ErrorKind::UnknownStationRef: return "UnknownStationRef";
    case ErrorKind::NonMonotoneSequence: return "NonMonotoneSequence";
    case ErrorKind::BranchTooShort: return "BranchTooShort";
    case ErrorKind::RepeatedStation: return "RepeatedStation";
    case ErrorKind::DuplicateRecord: return "DuplicateRecord";
    case ErrorKind::BadMode: return "BadMode";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::EmptyAccessibleSet: return "EmptyAccessibleSet";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::InsufficientSupport: return "InsufficientSupport";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::UnknownField: return "UnknownField";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(Preformatted, ErrorKind kind, const std::string& what)
    : std::runtime_error(what), kind_(kind) {}

namespace {

std::string locate(const std::string& file, std::size_t line, ErrorKind kind,
                   const std::string& detail) {
  std::string out = file;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  out += to_string(kind);
  out += ": ";
  out += detail;
  return out;
}

}  // namespace

InputError::InputError(ErrorKind kind, std::string file, std::size_t line,
                       const std::string& detail)
    : Error(Preformatted{}, kind, locate(file, line, kind, detail)),
      file_(std::move(file)),
      line_(line),
      detail_(detail) {}

}  // namespace transit
