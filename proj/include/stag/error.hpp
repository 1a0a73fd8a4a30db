#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stag {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  Disconnected,
  TooLarge,
  TooManyTrees,
  HasBridge,
  Acyclic,
  EdgeInTree,
  NotTwoConnected,
  NoWitness,
  NotAStag,
  Unannotated,
  NotMinimal,
  ValidationFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and is what callers
/// (and the CLI exit-code mapping) switch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, std::string reason);

  /// 1-based input line, 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace stag
