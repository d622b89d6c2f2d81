#pragma once

#include <stdexcept>
#include <string>

namespace qgame {

// Parameter outside its documented domain (p > 1, theta < 0, ...).
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request the library knows about but cannot honour.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result failed an internal consistency check (e.g. complex payoff).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Throws RangeError unless lo <= value <= hi. A slack of 1e-12 absorbs
// angles such as pi/2 that arrive through floating point arithmetic.
void require_range(const char* name, double value, double lo, double hi);

}  // namespace qgame
