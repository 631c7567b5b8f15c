#pragma once

#include <stdexcept>
#include <string>

namespace vsckin {

/// Input violates a documented invariant (bad config, out-of-range parameter,
/// unknown label). Maps to CLI exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical routine could not produce a trustworthy result. Maps to CLI
/// exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Reading or writing a file failed. Maps to CLI exit code 1.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vsckin
