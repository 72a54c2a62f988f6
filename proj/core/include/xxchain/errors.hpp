// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>

namespace xxchain {

// Rejected input: bad dimensions, out-of-range parameters, malformed configs.
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation could not be completed reliably (non-convergence,
// degenerate steady states, merged transition frequencies).
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failures when reading configs or writing results.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xxchain
