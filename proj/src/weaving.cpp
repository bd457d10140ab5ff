#include "weave3/weaving.hpp"

#include <algorithm>

#include "weave3/errors.hpp"

namespace weave3 {

namespace {

void require_n(long n) {
  if (n < 1) throw Error("weaving forms require n >= 1");
}

void require_spec(const WeavingSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw Error("weaving spec requires n >= 1 and m >= 1");
}

// w_1 = 1 + [m]^2 s + s^{2m}, half the eigenvalue sum of the weaving block.
LaurentPoly weaving_w1(long m) {
  std::vector<BigInt> ones(static_cast<std::size_t>(m), 1);
  const LaurentPoly bracket = LaurentPoly::from_coeffs(std::move(ones), 0);
  return LaurentPoly(1) + (bracket * bracket).shifted(1) + LaurentPoly::monomial(1, 2 * m);
}

}  // namespace

BraidWord3 weaving_word(const WeavingSpec& spec) {
  require_spec(spec);
  return BraidWord3({{1, spec.m}, {2, -spec.m}}).power(spec.n);
}

LaurentPoly weaving_trace(const WeavingSpec& spec) {
  require_spec(spec);
  const LaurentPoly w1 = weaving_w1(spec.m);
  const LaurentPoly prod = LaurentPoly::monomial(1, 2 * spec.m);  // s^{2m}
  LaurentPoly prev(2);  // w_0
  LaurentPoly curr = w1;
  for (long j = 1; j < spec.n; ++j) {
    LaurentPoly next = w1 * curr - prod * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr.shifted(-spec.n * spec.m);
}

LaurentPoly jones_weaving(const WeavingSpec& spec) {
  return weaving_trace(spec) - LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
}

CoeffRow jones_weaving_coeffs(long n) {
  require_n(n);
  CoeffRow row = whitney_c_chebyshev_row(n);
  row[static_cast<std::size_t>(n - 1)] -= 1;
  row[static_cast<std::size_t>(n + 1)] -= 1;
  return row;
}

CoeffRow alexander_weaving_explicit(long n) {
  require_n(n);
  // trinomial rows 0..n-1, computed once
  std::vector<CoeffRow> tri(static_cast<std::size_t>(n));
  tri[0] = {1};
  for (long i = 1; i < n; ++i) {
    const CoeffRow& p = tri[static_cast<std::size_t>(i - 1)];
    CoeffRow r(p.size() + 2);
    for (std::size_t j = 0; j < p.size(); ++j) {
      r[j] += p[j];
      r[j + 1] += p[j];
      r[j + 2] += p[j];
    }
    tri[static_cast<std::size_t>(i)] = std::move(r);
  }
  // factor_i = 2n (n+i)! / ((n-i-1)! (2i+2)!), integral for 0 <= i < n
  std::vector<BigInt> factor(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    factor[static_cast<std::size_t>(i)] =
        exact_quotient(2 * n * factorial(n + i), factorial(n - i - 1) * factorial(2 * i + 2));
  }
  CoeffRow alpha(static_cast<std::size_t>(2 * n - 1));
  for (long k = 0; k <= 2 * n - 2; ++k) {
    BigInt sum = 0;
    for (long i = 0; i < n; ++i) {
      const long idx = k + i - n + 1;
      if (idx < 0 || idx > 2 * i) continue;
      const BigInt term = factor[static_cast<std::size_t>(i)] *
                          tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx)];
      // sign (-1)^(k-n+i+1)
      if ((((k - n + i + 1) % 2) + 2) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    alpha[static_cast<std::size_t>(k)] = std::move(sum);
  }
  // Fix the global sign so the constant coefficient is +1; the two
  // equivalent sign conventions for this sum differ by -1 overall.
  if (alpha[0] < 0) {
    for (BigInt& a : alpha) a = -a;
  }
  if (alpha[0] != 1) throw InternalMismatch("alexander_weaving_explicit: alpha[0] != 1");
  return alpha;
}

CoeffRow alexander_weaving_division(long n) {
  require_n(n);
  // 2 s^n - C_n(s), the cleared form of s^n (2 - 2 T_n((1+s+s^2)/2s))
  CoeffRow c = whitney_c_chebyshev_row(n);
  std::vector<BigInt> num(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) num[i] = -c[i];
  num[static_cast<std::size_t>(n)] += 2;
  const LaurentPoly numerator = LaurentPoly::from_coeffs(std::move(num), 0);
  const LaurentPoly divisor = LaurentPoly::from_coeffs({1, -1, 1}, 0);
  const LaurentPoly quotient = numerator.exact_div(divisor).canonical_unit_normalize();
  return quotient.coeffs();
}

CoeffRow alexander_weaving_recurrence(long n) {
  require_n(n);
  CoeffRow prev = {1};  // n = 1
  if (n == 1) return prev;
  CoeffRow curr = {1, 3, 1};  // n = 2
  auto at = [](const CoeffRow& row, long k) -> BigInt {
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  for (long i = 3; i <= n; ++i) {
    CoeffRow next(static_cast<std::size_t>(2 * i - 1));
    next[0] = 1;
    next[1] = at(curr, 1) + at(curr, 0);
    for (long k = 2; k < i - 1; ++k) {
      next[static_cast<std::size_t>(k)] =
          at(curr, k) + at(curr, k - 1) + at(curr, k - 2) - at(prev, k - 2);
    }
    next[static_cast<std::size_t>(i - 1)] =
        at(curr, i - 1) + at(curr, i - 2) + at(curr, i - 3) - at(prev, i - 3) + 2;
    for (long k = i; k <= 2 * i - 2; ++k) {
      next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(2 * i - 2 - k)];
    }
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

CoeffRow cstar_row(long n) {
  require_n(n);
  const CoeffRow c = whitney_c_chebyshev_row(n);
  CoeffRow star(static_cast<std::size_t>(2 * n + 2));
  star[0] = 1;
  for (long k = 1; k < n; ++k) {
    star[static_cast<std::size_t>(k)] =
        c[static_cast<std::size_t>(k)] + c[static_cast<std::size_t>(k - 1)];
  }
  star[static_cast<std::size_t>(n)] =
      c[static_cast<std::size_t>(n)] + c[static_cast<std::size_t>(n - 1)] - 2;
  for (long k = n + 1; k <= 2 * n + 1; ++k) {
    star[static_cast<std::size_t>(k)] = star[static_cast<std::size_t>(2 * n + 1 - k)];
  }
  return star;
}

BigInt cstar_alternating_sum(const CoeffRow& cstar, long k) {
  BigInt sum = 0;
  bool negate = false;
  for (long idx = k; idx >= 0; idx -= 3) {
    if (idx < static_cast<long>(cstar.size())) {
      if (negate) {
        sum -= cstar[static_cast<std::size_t>(idx)];
      } else {
        sum += cstar[static_cast<std::size_t>(idx)];
      }
    }
    negate = !negate;
  }
  return sum;
}

BigInt det_weaving(const WeavingSpec& spec) {
  require_spec(spec);
  return lucas_general(spec.m, 2 * spec.n) - 2;
}

}  // namespace weave3
