#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sasmall {

enum class ErrorKind {
  BadRing,
  BadFactors,
  RingMismatch,
  ParentMismatch,
  ElementOutOfRange,
  InfiniteLattice,
  InfiniteEnumeration,
  InfiniteQuotient,
  BoundExceeded,
  Undecidable,
  ZeroT,
  NotWellDefined,
  NotEpi,
  NotMCS,
  ParseError,
  UnknownStatement,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure carries a kind so front ends can map it to an exit
/// status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace sasmall
