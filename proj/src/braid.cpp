#include "weave3/braid.hpp"

#include <array>
#include <cstdlib>
#include <sstream>

namespace weave3 {

namespace {

// [m] = 1 + s + ... + s^(m-1) = (1 - s^m)/(1 - s), m >= 1.
LaurentPoly bracket(long m) {
  std::vector<BigInt> ones(static_cast<std::size_t>(m), 1);
  return LaurentPoly::from_coeffs(std::move(ones), 0);
}

}  // namespace

std::string variable_name(Variable v) {
  switch (v) {
    case Variable::t: return "t";
    case Variable::s: return "s";
    default: return "x";
  }
}

BraidWord3::BraidWord3(std::vector<BraidLetter> letters) : letters_(std::move(letters)) {
  for (const BraidLetter& l : letters_) {
    if (l.generator != 1 && l.generator != 2) {
      throw WordParseError("generator index must be 1 or 2");
    }
    if (l.exponent == 0) throw ZeroExponent("braid letter with exponent 0");
  }
}

BraidWord3 BraidWord3::parse(const std::string& text) {
  std::vector<BraidLetter> letters;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long g = 0;
    try {
      g = std::stol(token, &used);
    } catch (const std::exception&) {
      throw WordParseError("braid word token '" + token + "' is not an integer");
    }
    if (used != token.size()) {
      throw WordParseError("braid word token '" + token + "' is not an integer");
    }
    if (g != 1 && g != 2 && g != -1 && g != -2) {
      throw WordParseError("braid word token '" + token + "' is not in {1, 2, -1, -2}");
    }
    letters.push_back({static_cast<int>(std::labs(g)), g > 0 ? 1L : -1L});
  }
  return BraidWord3(std::move(letters));
}

long BraidWord3::exponent_sum() const {
  long e = 0;
  for (const BraidLetter& l : letters_) e += l.exponent;
  return e;
}

BraidWord3 BraidWord3::inverse() const {
  std::vector<BraidLetter> rev(letters_.rbegin(), letters_.rend());
  for (BraidLetter& l : rev) l.exponent = -l.exponent;
  return BraidWord3(std::move(rev));
}

BraidWord3 BraidWord3::operator*(const BraidWord3& o) const {
  std::vector<BraidLetter> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord3(std::move(cat));
}

BraidWord3 BraidWord3::power(long n) const {
  std::vector<BraidLetter> rep;
  rep.reserve(letters_.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) rep.insert(rep.end(), letters_.begin(), letters_.end());
  return BraidWord3(std::move(rep));
}

std::array<int, 3> BraidWord3::strand_permutation() const {
  std::array<int, 3> perm = {0, 1, 2};
  for (const BraidLetter& l : letters_) {
    if (l.exponent % 2 == 0) continue;  // even powers are pure braids on endpoints
    const int i = l.generator - 1;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  }
  return perm;
}

std::string BraidWord3::str() const {
  std::ostringstream os;
  bool first = true;
  for (const BraidLetter& l : letters_) {
    for (long i = 0; i < std::labs(l.exponent); ++i) {
      if (!first) os << " ";
      os << (l.exponent > 0 ? l.generator : -l.generator);
      first = false;
    }
  }
  return os.str();
}

BurauMatrix BurauMatrix::identity(Variable v) {
  return {LaurentPoly(1), LaurentPoly(), LaurentPoly(), LaurentPoly(1), v};
}

BurauMatrix BurauMatrix::operator*(const BurauMatrix& o) const {
  if (var != o.var) throw InternalMismatch("matrix product across variable conventions");
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, var};
}

bool BurauMatrix::operator==(const BurauMatrix& o) const {
  return var == o.var && a == o.a && b == o.b && c == o.c && d == o.d;
}

BurauMatrix BurauMatrix::substituted_negate() const {
  Variable flipped = var;
  if (var == Variable::t) flipped = Variable::s;
  if (var == Variable::s) flipped = Variable::t;
  return {a.substitute_negate(), b.substitute_negate(), c.substitute_negate(),
          d.substitute_negate(), flipped};
}

BurauMatrix burau_generator_power(int generator, long m) {
  if (m == 0) throw ZeroExponent("burau_generator_power with exponent 0");
  if (generator != 1 && generator != 2) {
    throw WordParseError("generator index must be 1 or 2");
  }
  const long a = std::labs(m);
  const LaurentPoly br = bracket(a);
  const LaurentPoly one(1);
  if (generator == 1) {
    if (m > 0) {
      // psi_s(sigma_1^a) = [[s^a, [a]], [0, 1]]
      return {LaurentPoly::monomial(1, a), br, LaurentPoly(), one, Variable::s};
    }
    // exact inverse: [[s^-a, -s^-a [a]], [0, 1]]
    return {LaurentPoly::monomial(1, -a), -br.shifted(-a), LaurentPoly(), one, Variable::s};
  }
  if (m > 0) {
    // psi_s(sigma_2^a) = [[1, 0], [-s[a], s^a]]
    return {one, LaurentPoly(), -br.shifted(1), LaurentPoly::monomial(1, a), Variable::s};
  }
  // psi_s(sigma_2^-a) = s^-a [[s^a, 0], [s[a], 1]]
  return {one, LaurentPoly(), br.shifted(1 - a), LaurentPoly::monomial(1, -a), Variable::s};
}

BurauMatrix burau_of_word(const BraidWord3& w) {
  BurauMatrix acc = BurauMatrix::identity(Variable::s);
  for (const BraidLetter& l : w.letters()) {
    acc = acc * burau_generator_power(l.generator, l.exponent);
  }
  return acc.substituted_negate();  // report in variable t
}

BurauMatrix matrix_power(const BurauMatrix& m, unsigned long n) {
  BurauMatrix acc = BurauMatrix::identity(m.var);
  BurauMatrix base = m;
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1UL;
  }
  return acc;
}

}  // namespace weave3
