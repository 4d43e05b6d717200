#include "snprnet/errors.hpp"

namespace snprnet {

std::string_view error_module(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeViolation:
    case ErrorCode::CyclicGraph:
    case ErrorCode::UnreachableVertex:
    case ErrorCode::DuplicateLeafLabel:
    case ErrorCode::NoPendantRoot:
    case ErrorCode::MissingLeafLabel:
    case ErrorCode::TooFewLeaves:
    case ErrorCode::UnknownEdge:
    case ErrorCode::UnknownVertex:
    case ErrorCode::InvalidSuboperation:
    case ErrorCode::NotTreeChild:
      return "netcore";
    case ErrorCode::IllFormedOp:
    case ErrorCode::WouldViolateDegree:
      return "rearrange";
    case ErrorCode::NotATree:
    case ErrorCode::InternalConsistency:
      return "formulas";
    case ErrorCode::TaxonMismatch:
      return "canon";
    case ErrorCode::BadParam:
    case ErrorCode::CapExceeded:
      return "spacegen";
    case ErrorCode::SyntaxError:
    case ErrorCode::TagArityError:
      return "ionewick";
  }
  return "unknown";
}

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::UnreachableVertex: return "UnreachableVertex";
    case ErrorCode::DuplicateLeafLabel: return "DuplicateLeafLabel";
    case ErrorCode::NoPendantRoot: return "NoPendantRoot";
    case ErrorCode::MissingLeafLabel: return "MissingLeafLabel";
    case ErrorCode::TooFewLeaves: return "TooFewLeaves";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidSuboperation: return "InvalidSuboperation";
    case ErrorCode::NotTreeChild: return "NotTreeChild";
    case ErrorCode::IllFormedOp: return "IllFormedOp";
    case ErrorCode::WouldViolateDegree: return "WouldViolateDegree";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::TaxonMismatch: return "TaxonMismatch";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TagArityError: return "TagArityError";
  }
  return "Unknown";
}

std::string qualified_error_name(ErrorCode code) {
  std::string out(error_module(code));
  out += '.';
  out += error_name(code);
  return out;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(qualified_error_name(code) + ": " + message),
      code_(code),
      message_(message) {}

ParseError::ParseError(ErrorCode code, const std::string& message, std::size_t line,
                       std::size_t column)
    : Error(code, message + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

}  // namespace snprnet
