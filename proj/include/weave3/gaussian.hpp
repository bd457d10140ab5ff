#pragma once

#include "weave3/bigint.hpp"
#include "weave3/errors.hpp"

namespace weave3 {

// Exact Gaussian integer a + bi.  Used to evaluate Jones polynomials in the
// half-integer variable x = sqrt(t) at x = i (that is, t = -1) without
// leaving exact arithmetic.
struct GaussianInt {
  BigInt re;
  BigInt im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussianInt&) const = default;

  GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
  GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
  GaussianInt operator*(const GaussianInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  BigInt norm() const { return re * re + im * im; }
  bool is_unit() const { return norm() == 1; }

  // For a unit, the exponent u with *this == i^u, u in {0,1,2,3}.
  // Throws NonUnitPoint otherwise.
  int unit_log_i() const;

  // i^r for any integer r.
  static GaussianInt i_power(long r);
};

}  // namespace weave3
