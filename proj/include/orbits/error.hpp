#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbits {

enum class ErrorKind {
  DuplicateEntry,
  OutOfRange,
  BadWindow,
  IndexOutOfRange,
  BadRank,
  SizeMismatch,
  InvalidRankMatrix,
  RankMismatch,
  NotComparable,
  TooLarge,
  NotInColumn,
  NotATableau,
  NotAPermutation,
  ShapeMismatch,
  UnknownSuite,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace orbits
