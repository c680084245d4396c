#pragma once

#include <stdexcept>

namespace hyp2 {

// Malformed input: JSON documents, hex strings, field spec strings.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid field data: reducible modulus, element out of range, or an
// operation mixing elements of two different fields.
struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the supported range (degree guards, budgets, genus < 1).
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A smooth curve was required but a singular one was supplied.
struct SingularCurveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace hyp2
