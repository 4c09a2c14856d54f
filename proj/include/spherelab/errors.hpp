#pragma once

#include <stdexcept>
#include <string>

namespace spherelab {

/// Input violates an operation's precondition (non-unit direction, empty
/// sequence, mismatched dimensions, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external document (JSON table, config file, report).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spherelab
