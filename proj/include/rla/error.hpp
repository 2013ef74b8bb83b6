#pragma once

#include <stdexcept>
#include <string>

namespace rla {

/// Failure categories shared by every module and mirrored by the C API.
enum class ErrorCode {
  HeaderMismatch,
  AttrNotInHeader,
  SameAttribute,
  TypeMismatch,
  NotMaterializable,
  HeadersNotDisjoint,
  RenameCollision,
  HeaderNotBinary,
  Parse,
  Eval,
  UnboundName,
  UnknownObject,
  UnknownAttribute,
  TooLarge,
  Io,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Wraps an operation failure with the query sub-expression that caused it.
/// code() keeps the underlying cause (UnboundName, NotMaterializable, ...).
class EvalError : public Error {
 public:
  EvalError(ErrorCode cause, const std::string& message,
            const std::string& context);

  const std::string& context() const noexcept { return context_; }

 private:
  std::string context_;
};

}  // namespace rla
