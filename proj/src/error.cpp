#include "rla/error.hpp"

namespace rla {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::AttrNotInHeader: return "AttrNotInHeader";
    case ErrorCode::SameAttribute: return "SameAttribute";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::NotMaterializable: return "NotMaterializable";
    case ErrorCode::HeadersNotDisjoint: return "HeadersNotDisjoint";
    case ErrorCode::RenameCollision: return "RenameCollision";
    case ErrorCode::HeaderNotBinary: return "HeaderNotBinary";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Eval: return "EvalError";
    case ErrorCode::UnboundName: return "UnboundName";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(ErrorCode::Parse, message + " at line " + std::to_string(line) +
                                  ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

EvalError::EvalError(ErrorCode cause, const std::string& message,
                     const std::string& context)
    : Error(cause, message + " in `" + context + "`"), context_(context) {}

}  // namespace rla
