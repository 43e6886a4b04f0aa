#pragma once

#include <stdexcept>
#include <string>

namespace circa {

/// Raised for inputs that violate an operation's preconditions
/// (malformed rows, composite moduli, out-of-range sizes).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent exact routes disagree. Never valid input;
/// seeing one means the implementation is wrong.
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace circa
