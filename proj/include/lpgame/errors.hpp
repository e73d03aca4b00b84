#pragma once

#include <stdexcept>

namespace lpgame {

/// Raised when an input file cannot be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when input dimensions are inconsistent with each other.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a configurable size cap would be exceeded.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by strict_complementary_pair when one of the LPs is infeasible.
class InfeasibleSideError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by shrink_minimal_infeasible when the input system is feasible.
class FeasibleInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] void check_failed(const char* expr, const char* file, int line);

}  // namespace lpgame

// Internal consistency check. Every certificate is re-verified before it is
// returned, so a failure here is a bug in the library, never a user error.
#define LPGAME_CHECK(cond)                                                  \
  do {                                                                      \
    if (!(cond)) ::lpgame::check_failed(#cond, __FILE__, __LINE__);         \
  } while (0)
