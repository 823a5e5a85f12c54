#pragma once

#include <stdexcept>

namespace dupcode {

// Precondition or contract violation on otherwise well-formed input.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration / search guard was exceeded.
class LimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dupcode
