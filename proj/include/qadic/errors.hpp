#pragma once

#include <stdexcept>
#include <string>

namespace qadic {

// Violated precondition or invalid parameter value.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// File or stream failure; message carries path and cause.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qadic
