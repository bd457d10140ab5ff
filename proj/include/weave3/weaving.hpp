#pragma once

#include "weave3/braid.hpp"
#include "weave3/cheb_lucas.hpp"
#include "weave3/laurent.hpp"

namespace weave3 {

/// Parameters of the generalized weaving link W(3, n, m): the closure of
/// (sigma_1^m sigma_2^{-m})^n.  m = 1 gives the classical weaving link.
struct WeavingSpec {
  long n = 1;
  long m = 1;
};

/// The braid word (sigma_1^m sigma_2^{-m})^n.
BraidWord3 weaving_word(const WeavingSpec& spec);

/// Trace of the Burau image of the weaving braid, in variable s:
/// s^{-nm} w_n where w_0 = 2, w_1 = 1 + [m]^2 s + s^{2m} and
/// w_{j+1} = w_1 w_j - s^{2m} w_{j-1}.  The eigenvalue radicals are never
/// materialized; the power sums are generated by this integer recurrence.
LaurentPoly weaving_trace(const WeavingSpec& spec);

/// Jones polynomial of W(3, n, m) in variable s:
/// -s - s^{-1} + s^{-nm} w_n (the radical-free form of -s - s^{-1} + 2T_n).
LaurentPoly jones_weaving(const WeavingSpec& spec);

/// Jones coefficients a_0..a_{2n} of W(3, n), exponent of a_k being k - n:
/// a_k = c_{n,k} except that the two slots with |k - n| = 1 are decremented
/// by 1.  Requires n >= 1.
CoeffRow jones_weaving_coeffs(long n);

/// Alexander coefficients alpha_{n,0}..alpha_{n,2n-2} of W(3, n) by the
/// explicit double sum over factorial ratios and trinomial coefficients,
/// with the global sign fixed so alpha_{n,0} = +1.  Requires n >= 1.
CoeffRow alexander_weaving_explicit(long n);

/// Same row by the independent route: (2 s^n - C_n(s)) divided exactly by
/// 1 - s + s^2, then canonical unit normalization.  A NonExactDivision here
/// is a defect, never expected input behavior.
CoeffRow alexander_weaving_division(long n);

/// Same row by the boundary-clause recurrence
///   alpha_{n,0} = 1
///   alpha_{n,1} = alpha_{n-1,1} + alpha_{n-1,0}
///   alpha_{n,k} = alpha_{n-1,k} + alpha_{n-1,k-1} + alpha_{n-1,k-2}
///                 - alpha_{n-2,k-2}                      for 1 < k < n-1
///   alpha_{n,n-1} = (same four terms) + 2
/// seeded with rows [1] and [1,3,1]; the upper half is filled by palindromy.
/// (Unrolled, the interior clause reads alpha_{n,k} = alpha_{n-1,k} +
/// sum_{i=1}^{floor((k+1)/2)} alpha_{n-i,k-2i+1}; note the upper limit.)
CoeffRow alexander_weaving_recurrence(long n);

/// The padded row c*_{n,0..2n+1}: c*_0 = 1, c*_k = c_{n,k} + c_{n,k-1} for
/// 0 < k < n, c*_n = c_{n,n} + c_{n,n-1} - 2, then mirrored by
/// c*_k = c*_{2n+1-k}.  Its alternating 3-step partial sums reproduce the
/// Alexander row.  Requires n >= 1.
CoeffRow cstar_row(long n);

/// Alternating partial sum sum_i (-1)^i c*_{n,k-3i} of a c* row at index k.
BigInt cstar_alternating_sum(const CoeffRow& cstar, long k);

/// det W(3, n, m) = L_{m,2n} - 2 by the closed form.
BigInt det_weaving(const WeavingSpec& spec);

}  // namespace weave3
