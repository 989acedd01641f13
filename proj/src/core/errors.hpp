#pragma once

#include <stdexcept>
#include <string>

namespace qnp {

// Bad input, unparsable text, or a violated operation precondition.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal cross-check failed; indicates a bug or an unmet tolerance,
// never a caller mistake.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qnp
