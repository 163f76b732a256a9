#pragma once

#include <stdexcept>
#include <string>

namespace metramsey {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text could not be read as the expected format.
struct ParseError : Error {
  using Error::Error;
};

/// Well-formed input that violates an operation's precondition or a type invariant.
struct DomainError : Error {
  using Error::Error;
};

/// An exhaustive search was refused because the instance exceeds its size guard.
struct GuardExceeded : Error {
  using Error::Error;
};

} // namespace metramsey
