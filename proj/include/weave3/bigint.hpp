#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace weave3 {

// Arbitrary-precision integers everywhere: Whitney numbers and Alexander
// coefficients grow like phi^(2n) and overflow any fixed width quickly.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// n! for n >= 0.
BigInt factorial(long n);

// Binomial coefficient with the conventions needed by the Whitney-number
// formulas: C(a, 0) = 1 for every a (including a = -1), C(a, b) = 0 for
// b < 0, for a < 0 with b > 0, and for b > a >= 0.
BigInt binomial(long a, long b);

// num / den, throwing InternalMismatch when the division is not exact.
// Used for factorial-ratio coefficients that are integral by theorem.
BigInt exact_quotient(const BigInt& num, const BigInt& den);

double to_double(const BigInt& v);

}  // namespace weave3
