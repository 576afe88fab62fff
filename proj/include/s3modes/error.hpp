#pragma once

#include <stdexcept>
#include <string>

namespace s3modes {

/// Raised when arguments violate an operation's documented preconditions.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot reach a trustworthy answer
/// (ill-conditioned oracle system, group closure that does not terminate).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace s3modes
