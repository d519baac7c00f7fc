#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sdepth {

enum class ErrorKind {
  EmptyEdge,
  ContainedEdge,
  IsolatedVertex,
  VertexOutOfRange,
  CapExceeded,
  DegreeExceedsParts,
  EmptyResult,
  UnitIdeal,
  PartitionMismatch,
  NotUniform,
  NotComplete,
  EdgeCountOutOfRange,
  TooFewVertices,
  InvariantViolation,
  SearchBudgetExceeded,
  Parse,
  InvalidArgument,
};

inline constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyEdge: return "EmptyEdge";
    case ErrorKind::ContainedEdge: return "ContainedEdge";
    case ErrorKind::IsolatedVertex: return "IsolatedVertex";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DegreeExceedsParts: return "DegreeExceedsParts";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::EdgeCountOutOfRange: return "EdgeCountOutOfRange";
    case ErrorKind::TooFewVertices: return "TooFewVertices";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so that callers (the
/// CLI in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sdepth
