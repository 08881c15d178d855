#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixgeo {

enum class ErrorKind {
  LoopRejected,
  OutOfRange,
  DigonConflict,
  SyntaxError,
  Overflow,
  PreconditionFailed,
  DegenerateRoot,
  TooLarge,
  UnknownFixture,
  FixtureSelfCheckFailed,
  CapExceeded,
  NotBijection,
  InvalidParam,
  CatalogIncomplete,
  IdentityInS,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mixgeo
