#pragma once

#include <stdexcept>
#include <string>

namespace dnbv {

// Bad input data or configuration. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Failure while processing otherwise valid input (I/O, internal limits).
// The CLI maps this to exit code 2.
class RuntimeError : public std::runtime_error {
  public:
    explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dnbv
