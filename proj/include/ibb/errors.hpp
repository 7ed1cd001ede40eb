#pragma once

#include <stdexcept>
#include <string>

namespace ibb {

// Raised when text or JSON input does not match the documented formats.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when two elements live over ambient sets of different rank.
struct RankMismatchError : std::invalid_argument {
  RankMismatchError(int lhs, int rhs)
      : std::invalid_argument("rank mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs)) {}
};

// Raised when an exhaustive operation is requested above its rank cap.
struct CapExceededError : std::runtime_error {
  CapExceededError(int requested, int cap)
      : std::runtime_error("rank " + std::to_string(requested) +
                           " exceeds the enumeration cap " +
                           std::to_string(cap)),
        requested(requested),
        cap(cap) {}
  int requested;
  int cap;
};

}  // namespace ibb
