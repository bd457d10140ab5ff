#include <doctest.h>

#include <algorithm>
#include <random>

#include "weave3/invariants.hpp"

using namespace weave3;

namespace {

LaurentPoly P(std::vector<BigInt> coeffs, long offset = 0) {
  return LaurentPoly::from_coeffs(std::move(coeffs), offset);
}

BraidWord3 random_word(std::mt19937& rng, int length) {
  std::uniform_int_distribution<int> gen_dist(1, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<BraidLetter> letters;
  for (int i = 0; i < length; ++i) {
    letters.push_back({gen_dist(rng), sign_dist(rng) ? 1L : -1L});
  }
  return BraidWord3(std::move(letters));
}

bool closure_is_knot(const BraidWord3& w) {
  const auto perm = w.strand_permutation();
  return perm[0] != 0 && perm[1] != 1 && perm[2] != 2;
}

BraidWord3 rotated(const BraidWord3& w, std::size_t by) {
  std::vector<BraidLetter> letters = w.letters();
  std::rotate(letters.begin(), letters.begin() + static_cast<long>(by % letters.size()),
              letters.end());
  return BraidWord3(std::move(letters));
}

}  // namespace

TEST_CASE("alexander of small closures") {
  // figure-eight knot W(3,2)
  const InvariantValue fig8 = alexander(BraidWord3::parse("1 -2 1 -2"));
  CHECK(fig8.variable == Variable::t);
  CHECK(fig8.normalized);
  CHECK(fig8.poly == P({1, -3, 1}));

  // trefoil from (sigma_1 sigma_2)^2
  CHECK(alexander(BraidWord3::parse("1 2 1 2")).poly == P({1, -1, 1}));

  // W(3,3): all-positive s-row (1+s)^4
  const InvariantValue w33 = alexander(BraidWord3::parse("1 -2 1 -2 1 -2"));
  CHECK(alexander_s_form(w33) == P({1, 4, 6, 4, 1}));

  // unknot and split closures
  CHECK(alexander(BraidWord3::parse("1 2")).poly == LaurentPoly(1));
  CHECK(alexander(BraidWord3()).poly.is_zero());
  CHECK(alexander(BraidWord3::parse("1")).poly.is_zero());
  CHECK(alexander(BraidWord3::parse("1 1 1")).poly.is_zero());
}

TEST_CASE("jones of small closures") {
  // figure-eight: t^-2 - t^-1 + 1 - t + t^2
  const InvariantValue fig8 = jones(BraidWord3::parse("1 -2 1 -2"));
  CHECK(fig8.variable == Variable::x);
  CHECK_FALSE(fig8.normalized);
  CHECK(jones_in_t(fig8) == P({1, -1, 1, -1, 1}, -2));

  // trefoil under this chirality convention: -t^4 + t^3 + t
  CHECK(jones_in_t(jones(BraidWord3::parse("1 2 1 2"))) == P({1, 0, 1, -1}, 1));

  // empty word closes to the 3-component unlink: t + t^-1 + 2
  CHECK(jones_in_t(jones(BraidWord3())) == P({1, 2, 1}, -1));

  // odd exponent sum stays in x: sigma_1 closes to the 2-component unlink,
  // -x^-1 - x, i.e. -(sqrt(t) + 1/sqrt(t))
  CHECK(jones(BraidWord3::parse("1")).poly == P({-1, 0, -1}, -1));
  CHECK_THROWS_AS(jones_in_t(jones(BraidWord3::parse("1"))), Error);
}

TEST_CASE("determinants") {
  CHECK(determinant(BraidWord3::parse("1 -2 1 -2")) == 5);
  CHECK(determinant(BraidWord3::parse("1 -2 1 -2 1 -2")) == 16);
  CHECK(determinant(BraidWord3()) == 0);
  CHECK(determinant(BraidWord3::parse("1 2 1 2")) == 3);  // trefoil

  // figure-eight Jones at x = i is real with |value| = 5
  const GaussianInt v = jones(BraidWord3::parse("1 -2 1 -2")).poly.eval_gauss(GaussianInt(0, 1));
  CHECK(v.im == 0);
  CHECK(abs(v.re) == 5);
}

TEST_CASE("alexander is palindromic on knot closures") {
  std::mt19937 rng(2025);
  int knots = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const BraidWord3 w = random_word(rng, 1 + iter % 14);
    if (!closure_is_knot(w)) continue;
    ++knots;
    CHECK(alexander(w).poly.is_palindromic());
  }
  CHECK(knots > 50);
  // and on every weaving word, knot or not
  for (long n = 1; n <= 10; ++n) {
    CHECK(alexander(BraidWord3({{1, 1}, {2, -1}}).power(n)).poly.is_palindromic());
  }
}

TEST_CASE("jones is invariant under cyclic rotation") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 60; ++iter) {
    const BraidWord3 w = random_word(rng, 2 + iter % 10);
    const InvariantValue base = jones(w);
    const BraidWord3 rot = rotated(w, 1 + rng() % w.letters().size());
    CHECK(jones(rot) == base);
  }
}

TEST_CASE("even exponent sum gives integer t-powers") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 80; ++iter) {
    const BraidWord3 w = random_word(rng, iter % 12);
    const InvariantValue v = jones(w);
    if (w.exponent_sum() % 2 == 0) {
      for (std::size_t i = 0; i < v.poly.coeffs().size(); ++i) {
        const long exp = v.poly.offset() + static_cast<long>(i);
        if (exp % 2 != 0) CHECK(v.poly.coeffs()[i] == 0);
      }
    }
  }
}

TEST_CASE("determinant agrees with |Delta(-1)| on random words") {
  std::mt19937 rng(1618);
  for (int iter = 0; iter < 120; ++iter) {
    const BraidWord3 w = random_word(rng, iter % 13);
    const InvariantValue alex = alexander(w);
    BigInt via_alex = 0;
    if (!alex.poly.is_zero()) via_alex = abs(numerator(alex.poly.eval_int(BigInt(-1))));
    CHECK(determinant(w) == via_alex);  // determinant() also cross-checks internally
  }
}
