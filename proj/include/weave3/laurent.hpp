#pragma once

#include <complex>
#include <string>
#include <vector>

#include "weave3/bigint.hpp"
#include "weave3/errors.hpp"
#include "weave3/gaussian.hpp"

namespace weave3 {

/// Exact integer Laurent polynomial in one formal variable.
///
/// Dense representation: coeffs()[i] is the coefficient of v^(offset()+i),
/// and the first and last stored coefficients are nonzero.  The zero
/// polynomial stores an empty vector with offset 0.  Which variable a value
/// denotes (t, s, q, or x with x^2 = t) is a convention of the operation
/// that produced it, not a field of the type.
///
/// Values are immutable after construction and all operations are pure, so
/// instances may be shared freely across threads.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);
  explicit LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

  /// c * v^exp.
  static LaurentPoly monomial(BigInt c, long exp);

  /// Builds from a coefficient block starting at the given exponent;
  /// zero ends are trimmed.
  static LaurentPoly from_coeffs(std::vector<BigInt> coeffs, long offset = 0);

  bool is_zero() const { return coeffs_.empty(); }
  long offset() const { return offset_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Highest exponent carrying a nonzero coefficient; requires nonzero.
  long max_exp() const;

  /// Coefficient of v^exp (zero outside the stored block).
  const BigInt& coeff(long exp) const;

  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  /// Multiplication by v^k.
  LaurentPoly shifted(long k) const;

  /// Exact quotient; throws NonExactDivision if any remainder coefficient
  /// is nonzero.  Division runs from the lowest exponent upward and fails
  /// fast on the first inexact step.
  LaurentPoly exact_div(const LaurentPoly& d) const;

  /// Exact evaluation at an integer point.  When offset() < 0 the value is
  /// a rational with denominator v^(-offset).  Throws ZeroDenominator when
  /// v = 0 and negative exponents are present.
  BigRational eval_int(const BigInt& v) const;

  /// Exact evaluation at a Gaussian unit (1, -1, i, -i); units have exact
  /// inverses, so negative exponents are safe.  Throws NonUnitPoint.
  GaussianInt eval_gauss(const GaussianInt& v) const;

  /// Horner evaluation in double precision.  Throws ZeroDenominator when
  /// z = 0 and negative exponents are present.  No tolerance policy here;
  /// callers own the accuracy analysis.
  std::complex<double> eval_complex(std::complex<double> z) const;

  /// Substitution v -> -v: the coefficient at exponent k picks up (-1)^k.
  /// Involutive; bridges the s = -t variable conventions.
  LaurentPoly substitute_negate() const;

  /// The unique unit multiple +-v^k with offset 0 and positive leading
  /// (lowest) coefficient.  Throws ZeroPolynomial on zero input.
  LaurentPoly canonical_unit_normalize() const;

  /// Whether the coefficient block reads the same reversed.  True for the
  /// zero polynomial.
  bool is_palindromic() const;

  /// Exponents doubled (p(v) -> p(v^2)); maps a t-polynomial to the x
  /// convention with x^2 = t.
  LaurentPoly with_doubled_exponents() const;

  /// Inverse of with_doubled_exponents; requires every odd exponent to
  /// carry a zero coefficient.
  LaurentPoly with_halved_exponents() const;

  std::string str(const std::string& variable = "v") const;

 private:
  void normalize();

  long offset_ = 0;
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace weave3
