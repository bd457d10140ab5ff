#include <doctest.h>

#include "weave3/invariants.hpp"
#include "weave3/weaving.hpp"

using namespace weave3;

namespace {

LaurentPoly P(std::vector<BigInt> coeffs, long offset = 0) {
  return LaurentPoly::from_coeffs(std::move(coeffs), offset);
}

BigInt row_sum(const CoeffRow& row) {
  BigInt sum = 0;
  for (const BigInt& v : row) sum += v;
  return sum;
}

}  // namespace

TEST_CASE("weaving trace closed form") {
  CHECK(weaving_trace({1, 1}) == P({1, 1, 1}, -1));
  CHECK(weaving_trace({2, 1}) == P({1, 2, 1, 2, 1}, -2));
  // against the Burau oracle at (n, m) = (3, 2)
  const BurauMatrix block = burau_generator_power(1, 2) * burau_generator_power(2, -2);
  CHECK(weaving_trace({3, 2}) == matrix_power(block, 3).trace());
}

TEST_CASE("trace identity over a grid") {
  for (long n = 1; n <= 12; ++n) {
    for (long m = 1; m <= 5; ++m) {
      const BurauMatrix block = burau_generator_power(1, m) * burau_generator_power(2, -m);
      CHECK(weaving_trace({n, m}) == matrix_power(block, static_cast<unsigned long>(n)).trace());
    }
  }
}

TEST_CASE("jones closed form") {
  CHECK(jones_weaving({1, 1}) == LaurentPoly(1));  // W(3,1) is the unknot
  CHECK(jones_weaving({2, 1}) == P({1, 1, 1, 1, 1}, -2));
  CHECK(jones_weaving({3, 1}) == P({1, 3, 2, 4, 2, 3, 1}, -3));
}

TEST_CASE("jones identity against the Burau oracle") {
  for (long n = 1; n <= 8; ++n) {
    for (long m = 1; m <= 8; ++m) {
      const LaurentPoly oracle = jones_in_t(jones(weaving_word({n, m}))).substitute_negate();
      CHECK(jones_weaving({n, m}) == oracle);
    }
  }
}

TEST_CASE("jones coefficient rows") {
  CHECK(jones_weaving_coeffs(1) == CoeffRow{0, 1, 0});
  CHECK(jones_weaving_coeffs(2) == CoeffRow{1, 1, 1, 1, 1});
  CHECK(jones_weaving_coeffs(3) == CoeffRow{1, 3, 2, 4, 2, 3, 1});
  for (long n = 1; n <= 30; ++n) {
    // reassembly: sum_k a_k s^(k-n) is the closed-form Jones polynomial
    CHECK(LaurentPoly::from_coeffs(jones_weaving_coeffs(n), -n) == jones_weaving({n, 1}));
    // the decrement sits exactly at |k - n| = 1
    const CoeffRow a = jones_weaving_coeffs(n);
    const CoeffRow c = whitney_c_chebyshev_row(n);
    for (long k = 0; k <= 2 * n; ++k) {
      const BigInt delta = (k == n - 1 || k == n + 1) ? 1 : 0;
      CHECK(a[static_cast<std::size_t>(k)] == c[static_cast<std::size_t>(k)] - delta);
    }
  }
}

TEST_CASE("alexander rows: figure values") {
  CHECK(alexander_weaving_explicit(1) == CoeffRow{1});
  CHECK(alexander_weaving_explicit(2) == CoeffRow{1, 3, 1});
  CHECK(alexander_weaving_explicit(3) == CoeffRow{1, 4, 6, 4, 1});
  CHECK(alexander_weaving_explicit(5) == CoeffRow{1, 6, 15, 24, 29, 24, 15, 6, 1});
  CHECK(alexander_weaving_explicit(9) ==
        CoeffRow{1, 10, 45, 128, 272, 468, 676, 838, 900, 838, 676, 468, 272, 128, 45, 10, 1});
}

TEST_CASE("alexander rows: division route") {
  CHECK(alexander_weaving_division(1) == CoeffRow{1});
  CHECK(alexander_weaving_division(2) == CoeffRow{1, 3, 1});
  CHECK(alexander_weaving_division(3) == CoeffRow{1, 4, 6, 4, 1});
}

TEST_CASE("alexander rows: recurrence route") {
  // alpha_{4,2} = 6 + 4 + 1 - 1 = 10 and alpha_{4,3} = 4 + 6 + 4 - 3 + 2 = 13
  const CoeffRow row4 = alexander_weaving_recurrence(4);
  CHECK(row4 == CoeffRow{1, 5, 10, 13, 10, 5, 1});
  CHECK(row4[2] == 10);
  CHECK(row4[3] == 13);
}

TEST_CASE("three alexander routes agree") {
  for (long n = 1; n <= 40; ++n) {
    const CoeffRow explicit_row = alexander_weaving_explicit(n);
    CHECK(explicit_row == alexander_weaving_division(n));
    CHECK(explicit_row == alexander_weaving_recurrence(n));
    // palindromy
    for (std::size_t k = 0; k < explicit_row.size(); ++k) {
      CHECK(explicit_row[k] == explicit_row[explicit_row.size() - 1 - k]);
    }
  }
}

TEST_CASE("alexander rows match the Burau oracle") {
  for (long n = 1; n <= 12; ++n) {
    const LaurentPoly oracle = alexander_s_form(alexander(weaving_word({n, 1})));
    CHECK(oracle.offset() == 0);
    CHECK(oracle.coeffs() == alexander_weaving_explicit(n));
  }
}

TEST_CASE("cstar rows") {
  CHECK(cstar_row(2) == CoeffRow{1, 3, 1, 1, 3, 1});
  // alternating partial sums reproduce the alexander row...
  for (long n = 1; n <= 20; ++n) {
    const CoeffRow star = cstar_row(n);
    const CoeffRow alpha = alexander_weaving_recurrence(n);
    for (long k = 0; k <= 2 * n - 2; ++k) {
      CHECK(cstar_alternating_sum(star, k) == alpha[static_cast<std::size_t>(k)]);
    }
    // ...and vanish past the top degree
    for (long k = 2 * n - 1; k <= 2 * n + 1; ++k) {
      CHECK(cstar_alternating_sum(star, k) == 0);
    }
    // definitional palindromy c*_k = c*_{2n+1-k}
    for (long k = 0; k <= 2 * n + 1; ++k) {
      CHECK(star[static_cast<std::size_t>(k)] == star[static_cast<std::size_t>(2 * n + 1 - k)]);
    }
  }
}

TEST_CASE("unrolled recurrence needs upper limit floor((k+1)/2)") {
  // alpha_{n,k} = alpha_{n-1,k} + sum_{i=1}^{floor((k+1)/2)} alpha_{n-i,k-2i+1}
  // for 1 < k < n-1; the floor((k-1)/2) variant undercounts for every parity.
  auto alpha_at = [](const CoeffRow& row, long k) -> BigInt {
    if (k < 0 || k >= static_cast<long>(row.size())) return 0;
    return row[static_cast<std::size_t>(k)];
  };
  std::vector<CoeffRow> rows;
  for (long n = 1; n <= 25; ++n) rows.push_back(alexander_weaving_recurrence(n));
  for (long n = 4; n <= 25; ++n) {
    for (long k = 2; k < n - 1; ++k) {
      BigInt expanded = alpha_at(rows[static_cast<std::size_t>(n - 2)], k);
      for (long i = 1; i <= (k + 1) / 2; ++i) {
        expanded += alpha_at(rows[static_cast<std::size_t>(n - 1 - i)], k - 2 * i + 1);
      }
      CHECK(expanded == alpha_at(rows[static_cast<std::size_t>(n - 1)], k));
    }
    // k = n-1 carries the extra +2
    const long k = n - 1;
    if (k > 2) {
      BigInt expanded = alpha_at(rows[static_cast<std::size_t>(n - 2)], k) + 2;
      for (long i = 1; i <= (k + 1) / 2; ++i) {
        expanded += alpha_at(rows[static_cast<std::size_t>(n - 1 - i)], k - 2 * i + 1);
      }
      CHECK(expanded == alpha_at(rows[static_cast<std::size_t>(n - 1)], k));
    }
  }
}

TEST_CASE("determinant closed form") {
  CHECK(det_weaving({2, 1}) == 5);
  CHECK(det_weaving({4, 1}) == 45);
  CHECK(det_weaving({1, 2}) == 4);
  CHECK(det_weaving({1, 2}) == determinant(weaving_word({1, 2})));
  for (long n = 1; n <= 6; ++n) {
    for (long m = 1; m <= 3; ++m) {
      CHECK(det_weaving({n, m}) == determinant(weaving_word({n, m})));
    }
  }
}

TEST_CASE("row sums and |V(1)| equal the determinant") {
  for (long n = 1; n <= 40; ++n) {
    const BigInt det = det_weaving({n, 1});
    CHECK(row_sum(alexander_weaving_recurrence(n)) == det);
    CHECK(det == lucas(2 * n) - 2);
    const BigRational v1 = jones_weaving({n, 1}).eval_int(1);
    CHECK(denominator(v1) == 1);
    CHECK(abs(numerator(v1)) == det);
  }
}
