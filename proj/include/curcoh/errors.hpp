#pragma once

#include <stdexcept>
#include <string>

namespace curcoh {

// A caller supplied an input outside an operation's domain (bad type label,
// repeated evaluation points, non-dominant weight, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed (d∘d ≠ 0, Jacobi, a character that
// does not decompose). Always a bug upstream of the check.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace curcoh
