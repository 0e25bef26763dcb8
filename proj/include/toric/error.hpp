#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Malformed textual input (mosaic codes, PD strings, table files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well formed but violates a precondition of the operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace toric
