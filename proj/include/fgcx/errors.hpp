#pragma once

#include <stdexcept>
#include <string>

namespace fgcx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text or unknown generator name.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to a constructor (k < 1, mismatched alphabets, invalid tree ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Full Whitehead enumeration requested above the configured rank guard.
class RankGuardError : public Error {
 public:
  RankGuardError(std::size_t rank, std::size_t guard)
      : Error("rank " + std::to_string(rank) + " exceeds enumeration guard " +
              std::to_string(guard)),
        rank_(rank),
        guard_(guard) {}

  std::size_t rank() const { return rank_; }
  std::size_t guard() const { return guard_; }

 private:
  std::size_t rank_;
  std::size_t guard_;
};

/// Primitivity could not be decided: descent is out of range and the
/// Whitehead graph does not certify non-primitivity.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

/// The Whitehead graph has no edges, so it has no connectivity class.
class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace fgcx
