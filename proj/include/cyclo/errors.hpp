#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclo {

using Int = std::int64_t;

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact polynomial division left a nonzero remainder. Raised only where an
// algebraic identity guarantees divisibility, so seeing it means the identity
// under test (or the caller's input) is broken.
struct InexactDivision : Error {
    using Error::Error;
};

// The independent construction routes of a generalized cyclotomic polynomial
// disagree.
struct RouteMismatch : Error {
    using Error::Error;
};

// The floating-point root-product oracle could not round its coefficients to
// integers within the configured precision.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// Operation requires 1 to be a member of the divisor-value set S
// (mu_{A,S}(1) = 0 has no convolution inverse otherwise).
struct SetExcludesOne : Error {
    using Error::Error;
};

// The coefficient recursion only applies when n is a product of A-primitive
// prime powers.
struct NotPrimitiveProduct : Error {
    using Error::Error;
};

// A cyclotomic-integer value that is provably rational failed to reduce to a
// rational. Signals an implementation bug, never expected.
struct NonRationalResult : Error {
    using Error::Error;
};

// A gcd-class weight sum that is provably a rational integer failed to reduce
// to one. Would falsify the underlying theorem; never expected.
struct NonIntegerClassSum : Error {
    using Error::Error;
};

// An internal exactness assertion failed (e.g. a division known to be exact
// was not). Indicates a bug in this library.
struct InternalInconsistency : Error {
    using Error::Error;
};

// A type function violates the regular-system conditions.
struct SystemViolation : Error {
    SystemViolation(Int p_, int a_, std::string reason_)
        : Error("regular system violated at (" + std::to_string(p_) + "," +
                std::to_string(a_) + "): " + reason_),
          p(p_), a(a_), reason(std::move(reason_)) {}
    Int p;
    int a;
    std::string reason;
};

} // namespace cyclo
