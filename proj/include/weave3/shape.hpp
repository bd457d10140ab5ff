#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weave3/cheb_lucas.hpp"
#include "weave3/laurent.hpp"

namespace weave3 {

/// Shape verdicts for a coefficient row.  A trapezoidal row strictly
/// increases, stays constant on a plateau, then strictly decreases; r is
/// the plateau half-length and is reported only for palindromic rows with
/// an even plateau span.  Log-concavity is the inequality
/// a_k^2 >= a_{k-1} a_{k+1} on interior indices, checked exactly.
struct TrapezoidReport {
  bool is_positive = false;
  bool is_trapezoidal = false;
  std::optional<std::size_t> plateau_lo;
  std::optional<std::size_t> plateau_hi;
  std::optional<long> r;
  bool is_log_concave = false;
};

TrapezoidReport trapezoid_check(const CoeffRow& row);

/// One closed-form zero of the Alexander polynomial of W(3, n) in the
/// t variable.  branch is +1 or -1 for the two quadratic branches, 0 when
/// the discriminant vanishes and the branches coincide.
struct ZeroEntry {
  long k = 0;
  int branch = 0;
  std::complex<double> value;
  bool is_real = false;
};

struct ZeroSet {
  std::vector<ZeroEntry> entries;
};

/// Zeros of the Alexander polynomial of W(3, n) in closed form:
/// z = -1/2 (2 cos(2 k pi / n) - 1 +- sqrt((2 cos(2 k pi / n) - 1)^2 - 4))
/// for 1 <= k <= floor(n/2).  k = 0 is excluded: it corresponds to the
/// zeros of the divisor 1 - s + s^2, which are not zeros of Delta.  The
/// discriminant vanishes exactly when 3 | n and k = n/3, which is detected
/// algebraically and yields the single real zero 1.  Requires n >= 2.
ZeroSet zeros_closed_form(long n);

/// True iff every zero has real part > -1 and every non-real zero has
/// modulus within tol of 1.  Requires tol > 0.
bool hoste_check(const ZeroSet& zs, double tol);

/// All roots of the canonical normalization of p, with multiplicity, by
/// simultaneous Aberth iteration on max-scaled coefficients: up to 200
/// double-precision sweeps, then up to 60 quad-precision polishing sweeps
/// (double roots inside tight clusters are only determined to ~1e-4 by
/// double arithmetic).  Each returned root r must satisfy the relative
/// residual bound |p(r)| <= max(tol, 1e-10) * sum_k |c_k| |r|^k; otherwise
/// NoConvergence is thrown.  (A bound independent of |r| is unattainable in
/// finite precision once roots of modulus > 1 meet large coefficients.)
/// Requires p nonzero and nonconstant.
std::vector<std::complex<double>> numeric_roots(const LaurentPoly& p, double tol);

/// Whether every closed-form zero z of W(3, n) satisfies
/// |Delta(s = -z)| < tol * (1 + max coefficient).  Both the zero and the
/// polynomial value are computed in 100-digit arithmetic: near the outer
/// real zeros the slope of Delta grows like phi^(4n) while the bound only
/// grows like phi^(2n), so a double-precision measurement would drown in
/// its own rounding noise from n around 14.  Requires n >= 2.
bool weaving_zero_residuals_ok(long n, double tol, std::string* why = nullptr);

/// Cross-validates the closed-form zeros of W(3, n) against the numeric
/// roots of the t-variable Alexander polynomial: (a) the residual check
/// weaving_zero_residuals_ok, and (b) the numeric roots cluster onto the
/// distinct closed-form values, every value is hit, each root lies within
/// max(1e-6, tol^(1/mult)) of its value, and the multiplicities total
/// 2n - 2.  On failure, *why (if given) describes the first offending
/// check.  Requires n >= 2.
bool cross_validate_zeros(long n, double tol, std::string* why = nullptr);

}  // namespace weave3
