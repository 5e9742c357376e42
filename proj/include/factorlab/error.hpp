#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace factorlab {

/// Base class for every error the library raises.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists, pattern strings).
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// A caller broke an operation's precondition (overlapping sets, bad params).
class ContractViolation : public Error {
public:
  using Error::Error;
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace factorlab
