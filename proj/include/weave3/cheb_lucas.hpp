#pragma once

#include <vector>

#include "weave3/bigint.hpp"

namespace weave3 {

/// A finite coefficient sequence indexed from 0: Whitney rows c_{n,.},
/// Alexander rows alpha_{n,.}, Jones rows a_., trinomial rows.
using CoeffRow = std::vector<BigInt>;

/// Monomial coefficients of the Chebyshev polynomial of the first kind
/// T_n(x), degree exactly n, via T_{n+1} = 2x T_n - T_{n-1}.
CoeffRow chebyshev_coeffs(long n);

/// Coefficients of the expansion T_n(x) = sum_k e_k (1-x)^k with
/// e_k = n (-2)^k (n+k-1)! / ((n-k)! (2k)!), k = 0..n.  The factorial
/// ratios are integral; a nonzero remainder throws InternalMismatch.
/// Requires n >= 1.
CoeffRow chebyshev_series_row(long n);

/// Reassembles a (1-x)-series back to monomial coefficients; inverse check
/// for chebyshev_series_row.
CoeffRow chebyshev_series_reassemble(const CoeffRow& series);

/// Row n of the trinomial triangle: coefficients of (1 + q + q^2)^n.
CoeffRow trinomial_row(long n);

/// Coefficient of q^k in (1 + q + q^2)^n; 0 outside 0..2n.
BigInt trinomial(long n, long k);

/// Whitney number c_{n,k} of the Lucas lattice by the explicit sum
/// c_{n,k} = sum_{j=0}^{floor(k/2)} n/(n-j) C(n-j, n-k+j) C(k-j-1, j)
/// for k < 2n, and 1 for k = 2n.  The n/(n-j) factor is carried through
/// exact integer cancellation.  Requires n >= 1.
BigInt whitney_c_explicit(long n, long k);

/// Full row c_{n,0..2n} by the explicit formula.  Requires n >= 1.
CoeffRow whitney_c_explicit_row(long n);

/// Row of the Lucas-lattice rank polynomial C_n(q) by the cleared
/// linear recurrence C_{n+1} = (1+q+q^2) C_n - q^2 C_{n-1} with
/// C_0 = 2, C_1 = 1+q+q^2.  Requires n >= 0.
CoeffRow whitney_c_chebyshev_row(long n);

/// Row by the four-term Whitney recurrence
/// c_{n,k} = c_{n-1,k} + c_{n-1,k-1} + c_{n-1,k-2} - c_{n-2,k-2}
/// with c_{n,0} = 1, c_{n,1} = n, seeded from rows [2] and [1,1,1].
CoeffRow whitney_c_recurrence_row(long n);

/// Lucas numbers: L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}.
BigInt lucas(long k);

/// Generalized Lucas numbers L_{m,k} = m L_{m,k-1} + L_{m,k-2} with seeds
/// L_{m,0} = 2 and L_{m,1} = m, so that L_{m,k} equals
/// ((m+sqrt(m^2+4))/2)^k + ((m-sqrt(m^2+4))/2)^k and L_{1,k} is the
/// classical Lucas sequence.  Requires m >= 1.
BigInt lucas_general(long m, long k);

/// Extends a pair of consecutive even-index Fibonacci-lattice rank rows by
/// the recurrence F_{j+2}(q) = (1+q+q^2) F_{j+1}(q) - q^2 F_j(q), i.e.
/// f_{n+4,k+2} = f_{n+2,k+2} + f_{n+2,k+1} + f_{n+2,k} - f_{n,k}.
/// Base rows are caller-supplied; returns `steps` new rows in order.
std::vector<CoeffRow> fibonacci_f_extend(const CoeffRow& base_prev, const CoeffRow& base_curr,
                                         long steps);

}  // namespace weave3
