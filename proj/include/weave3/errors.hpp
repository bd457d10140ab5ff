#pragma once

#include <stdexcept>
#include <string>

namespace weave3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial division left a nonzero remainder.  The closed-form identities
// implemented here only ever divide exactly, so this firing signals a
// formula or input error rather than a recoverable condition.
struct NonExactDivision : Error {
  using Error::Error;
};

// Evaluation at 0 of a Laurent polynomial with negative exponents.
struct ZeroDenominator : Error {
  using Error::Error;
};

// Gaussian-integer evaluation requested at a point other than 1, -1, i, -i.
struct NonUnitPoint : Error {
  using Error::Error;
};

// Unit normalization of the zero polynomial.
struct ZeroPolynomial : Error {
  using Error::Error;
};

// Braid generator power with exponent 0.
struct ZeroExponent : Error {
  using Error::Error;
};

// Braid word text that does not follow the accepted syntax.
struct WordParseError : Error {
  using Error::Error;
};

// Two independent computation routes disagreed on a value they must share.
struct InternalMismatch : Error {
  using Error::Error;
};

// Iterative root finding exhausted its budget without meeting the
// residual bound.
struct NoConvergence : Error {
  using Error::Error;
};

}  // namespace weave3
