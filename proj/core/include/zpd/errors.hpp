#pragma once

#include <stdexcept>
#include <string>

namespace zpd {

// Malformed or mismatched input: wrong dimension, non-prime modulus, group
// mismatch between operands, bad JSON fields.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its mathematical domain (e.g. the line of
// the origin, a decomposition of a function with negative values).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A result failed its own post-condition check. Always a bug, never a
// property of the input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace zpd
