#pragma once

#include <stdexcept>
#include <string>

namespace hca {

// Status taxonomy shared by the C API and the CLI exit codes.
enum class Status : int {
  Ok = 0,
  Validation = 1,  // bad input: shape, parse, domain violations
  Resource = 2,    // configured resource cap exceeded (bit-length, search space)
  Internal = 3,    // broken internal invariant; always a bug
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hca
