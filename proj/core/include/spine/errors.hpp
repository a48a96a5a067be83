#pragma once

#include <stdexcept>

namespace spine {

// Malformed arguments to a pure operation (bad entries, mismatched fields).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameter sets that cannot be built at all.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace spine
