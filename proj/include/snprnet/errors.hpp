#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace snprnet {

enum class ErrorCode {
  // netcore
  DegreeViolation,
  CyclicGraph,
  UnreachableVertex,
  DuplicateLeafLabel,
  NoPendantRoot,
  MissingLeafLabel,
  TooFewLeaves,
  UnknownEdge,
  UnknownVertex,
  InvalidSuboperation,
  NotTreeChild,
  // rearrange
  IllFormedOp,
  WouldViolateDegree,
  // formulas
  NotATree,
  InternalConsistency,
  // canon / spacegen
  TaxonMismatch,
  BadParam,
  CapExceeded,
  // ionewick
  SyntaxError,
  TagArityError,
};

// Module that owns the code, e.g. "netcore".
std::string_view error_module(ErrorCode code);
std::string_view error_name(ErrorCode code);
// "netcore.DegreeViolation"
std::string qualified_error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

// Parser failures carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace snprnet
