#pragma once

#include <stdexcept>
#include <string>

namespace cstar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad Dynkin type, node out of range, shape mismatch.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (e.g. the grading is not short).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (orbit size, module rank) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Non-invertible input.  `norm()` carries the vanishing determinant or norm
/// as a decimal string.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, std::string norm)
      : Error(what), norm_(std::move(norm)) {}
  const std::string& norm() const { return norm_; }

 private:
  std::string norm_;
};

}  // namespace cstar
