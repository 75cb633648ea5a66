#pragma once

#include <stdexcept>
#include <string>

namespace bbm {

/// Malformed or inconsistent input (bad dimensions, parse failures, violated
/// preconditions). The CLI maps this to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical check failed on otherwise well-formed input. The CLI maps
/// this to exit status 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bbm
