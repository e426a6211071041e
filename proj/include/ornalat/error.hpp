#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ornalat {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Enumeration produced more elements than the configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t count)
      : Error("enumeration cap exceeded after " + std::to_string(count) +
              " elements"),
        count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

}  // namespace ornalat
