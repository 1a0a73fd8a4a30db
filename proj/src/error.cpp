#include "stag/error.hpp"

namespace stag {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooManyTrees: return "TooManyTrees";
    case ErrorKind::HasBridge: return "HasBridge";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::EdgeInTree: return "EdgeInTree";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::NotAStag: return "NotAStag";
    case ErrorKind::Unannotated: return "Unannotated";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

ParseError::ParseError(int line, std::string reason)
    : Error(ErrorKind::Parse,
            (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + reason),
      line_(line),
      reason_(std::move(reason)) {}

}  // namespace stag
