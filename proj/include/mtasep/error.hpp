#pragma once

#include <stdexcept>
#include <string>

namespace mtasep {

/// Caller supplied arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed its configured enumeration or state budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A violated internal invariant (e.g. a non-exact division in a closed form).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mtasep
