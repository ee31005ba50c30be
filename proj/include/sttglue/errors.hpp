// Error taxonomy shared across the library; the CLI maps each type to its
// own exit code.
#pragma once

#include <stdexcept>
#include <string>

namespace sttglue {

/// Malformed input file or module literal.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Indecomposable enumeration hit its cap: the algebra is representation
/// infinite, or the cap was set too small.
struct RepInfiniteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search (iso witness, splitting endomorphism) exhausted its budget
/// without a certificate either way.
struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A postcondition backed by one of the theorems failed; treated as a bug
/// witness, never silently swallowed.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace sttglue
