#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace arakelov {

// Malformed textual or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arguments that violate an operation's precondition (non-prime p, point on a
// branch cut, coincident points, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root finding or quadrature that failed to reach the requested accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// %g rendering for numbers quoted in error messages.
inline std::string message_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace arakelov
