#include "weave3/cheb_lucas.hpp"

#include <algorithm>

#include "weave3/errors.hpp"

namespace weave3 {

namespace {

// Convolution of a row with (1 + q + q^2).
CoeffRow conv_trinomial(const CoeffRow& row) {
  CoeffRow out(row.size() + 2);
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] += row[i];
    out[i + 1] += row[i];
    out[i + 2] += row[i];
  }
  return out;
}

// a - q^2 b, padded to the longer length.
CoeffRow sub_shift2(const CoeffRow& a, const CoeffRow& b) {
  CoeffRow out = a;
  if (out.size() < b.size() + 2) out.resize(b.size() + 2);
  for (std::size_t i = 0; i < b.size(); ++i) out[i + 2] -= b[i];
  return out;
}

}  // namespace

CoeffRow chebyshev_coeffs(long n) {
  CoeffRow prev = {1};     // T_0
  if (n == 0) return prev;
  CoeffRow curr = {0, 1};  // T_1
  for (long i = 1; i < n; ++i) {
    CoeffRow next(curr.size() + 1);
    for (std::size_t j = 0; j < curr.size(); ++j) next[j + 1] = 2 * curr[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

CoeffRow chebyshev_series_row(long n) {
  if (n < 1) throw Error("chebyshev_series_row requires n >= 1");
  CoeffRow row(static_cast<std::size_t>(n) + 1);
  BigInt pow2 = 1;
  for (long k = 0; k <= n; ++k) {
    // the 2^k factor is needed for integrality (e.g. n=7, k=5 gives 77/2
    // without it), so divide only after multiplying it in
    const BigInt num = n * factorial(n + k - 1) * pow2;
    const BigInt den = factorial(n - k) * factorial(2 * k);
    BigInt e = exact_quotient(num, den);
    if (k & 1) e = -e;
    row[static_cast<std::size_t>(k)] = std::move(e);
    pow2 <<= 1;
  }
  return row;
}

CoeffRow chebyshev_series_reassemble(const CoeffRow& series) {
  CoeffRow acc(series.size());
  CoeffRow basis = {1};  // (1 - x)^k, coefficients in x
  for (std::size_t k = 0; k < series.size(); ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) acc[j] += series[k] * basis[j];
    // multiply basis by (1 - x)
    CoeffRow next(basis.size() + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j] += basis[j];
      next[j + 1] -= basis[j];
    }
    basis = std::move(next);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

CoeffRow trinomial_row(long n) {
  CoeffRow row = {1};
  for (long i = 0; i < n; ++i) row = conv_trinomial(row);
  return row;
}

BigInt trinomial(long n, long k) {
  if (n < 0 || k < 0 || k > 2 * n) return 0;
  const CoeffRow row = trinomial_row(n);
  return row[static_cast<std::size_t>(k)];
}

BigInt whitney_c_explicit(long n, long k) {
  if (n < 1) throw Error("whitney_c_explicit requires n >= 1");
  if (k < 0 || k > 2 * n) return 0;
  if (k == 2 * n) return 1;
  BigInt sum = 0;
  for (long j = 0; j <= k / 2; ++j) {
    const BigInt b1 = binomial(n - j, n - k + j);
    if (b1 == 0) continue;
    const BigInt b2 = binomial(k - j - 1, j);
    if (b2 == 0) continue;
    // n/(n-j) * b1 * b2, integral by exact cancellation
    sum += exact_quotient(n * b1 * b2, BigInt(n - j));
  }
  return sum;
}

CoeffRow whitney_c_explicit_row(long n) {
  CoeffRow row(static_cast<std::size_t>(2 * n) + 1);
  for (long k = 0; k <= 2 * n; ++k) row[static_cast<std::size_t>(k)] = whitney_c_explicit(n, k);
  return row;
}

CoeffRow whitney_c_chebyshev_row(long n) {
  if (n < 0) throw Error("whitney_c_chebyshev_row requires n >= 0");
  CoeffRow prev = {2};        // C_0 = 2 q^0 T_0
  if (n == 0) return prev;
  CoeffRow curr = {1, 1, 1};  // C_1 = 1 + q + q^2
  for (long i = 1; i < n; ++i) {
    CoeffRow next = sub_shift2(conv_trinomial(curr), prev);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

CoeffRow whitney_c_recurrence_row(long n) {
  if (n < 0) throw Error("whitney_c_recurrence_row requires n >= 0");
  CoeffRow prev = {2};
  if (n == 0) return prev;
  CoeffRow curr = {1, 1, 1};
  auto at = [](const CoeffRow& row, long k) -> BigInt {
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  for (long i = 2; i <= n; ++i) {
    CoeffRow next(static_cast<std::size_t>(2 * i) + 1);
    next[0] = 1;
    next[1] = i;
    for (long k = 2; k <= 2 * i; ++k) {
      next[static_cast<std::size_t>(k)] =
          at(curr, k) + at(curr, k - 1) + at(curr, k - 2) - at(prev, k - 2);
    }
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

BigInt lucas(long k) { return lucas_general(1, k); }

BigInt lucas_general(long m, long k) {
  if (m < 1) throw Error("lucas_general requires m >= 1");
  if (k < 0) throw Error("lucas_general requires k >= 0");
  BigInt prev = 2;  // L_{m,0}
  if (k == 0) return prev;
  BigInt curr = m;  // L_{m,1}
  for (long i = 2; i <= k; ++i) {
    BigInt next = m * curr + prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

std::vector<CoeffRow> fibonacci_f_extend(const CoeffRow& base_prev, const CoeffRow& base_curr,
                                         long steps) {
  if (steps < 1) throw Error("fibonacci_f_extend requires steps >= 1");
  std::vector<CoeffRow> out;
  out.reserve(static_cast<std::size_t>(steps));
  CoeffRow prev = base_prev;
  CoeffRow curr = base_curr;
  for (long i = 0; i < steps; ++i) {
    CoeffRow next = sub_shift2(conv_trinomial(curr), prev);
    out.push_back(next);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return out;
}

}  // namespace weave3
