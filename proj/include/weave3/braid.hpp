#pragma once

#include <array>
#include <string>
#include <vector>

#include "weave3/laurent.hpp"

namespace weave3 {

// The two variable conventions in use: t for the Burau representation as
// classically written, s = -t for the weaving-link closed forms, and
// x with x^2 = t for Jones values of words with odd exponent sum.  Carrying
// the convention on matrices and invariant values prevents silent sign
// errors when results from the two worlds meet.
enum class Variable { t, s, x };

std::string variable_name(Variable v);

struct BraidLetter {
  int generator = 1;  // 1 or 2
  long exponent = 1;  // nonzero

  bool operator==(const BraidLetter&) const = default;
};

/// A word in the generators of the 3-strand braid group.  Adjacent letters
/// with the same generator may be merged but need not be; the empty word is
/// allowed (its closure is the 3-component unlink).
class BraidWord3 {
 public:
  BraidWord3() = default;
  explicit BraidWord3(std::vector<BraidLetter> letters);

  /// Parses whitespace-separated signed integers: g > 0 denotes sigma_g,
  /// -g denotes sigma_g^{-1}.  Only |g| in {1, 2} is accepted.
  /// "1 -2 1 -2" is (sigma_1 sigma_2^{-1})^2.
  static BraidWord3 parse(const std::string& text);

  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  /// Sum of all exponents; controls unit prefactors in both invariant
  /// formulas.
  long exponent_sum() const;

  BraidWord3 inverse() const;
  BraidWord3 operator*(const BraidWord3& o) const;  // concatenation
  BraidWord3 power(long n) const;                   // n >= 0

  /// The permutation of strand endpoints {0,1,2} induced by the closure;
  /// the closure is a knot exactly when this is a 3-cycle.
  std::array<int, 3> strand_permutation() const;

  std::string str() const;

  bool operator==(const BraidWord3&) const = default;

 private:
  std::vector<BraidLetter> letters_;
};

/// 2x2 matrix over integer Laurent polynomials, row-major [[a, b], [c, d]],
/// tagged with the variable convention of the operation that produced it.
struct BurauMatrix {
  LaurentPoly a, b, c, d;
  Variable var = Variable::t;

  static BurauMatrix identity(Variable v);

  BurauMatrix operator*(const BurauMatrix& o) const;
  bool operator==(const BurauMatrix& o) const;

  LaurentPoly trace() const { return a + d; }
  LaurentPoly det() const { return a * d - b * c; }

  /// Entry-wise variable flip v -> -v, retagging s <-> t.
  BurauMatrix substituted_negate() const;
};

/// Closed-form image of sigma_g^m under the reduced Burau representation in
/// variable s.  Negative powers are the exact matrix inverses; entries stay
/// Laurent (negative powers of s appear, denominators are never cleared).
/// Throws ZeroExponent for m = 0.
BurauMatrix burau_generator_power(int generator, long m);

/// Ordered product of generator images, in variable t.  The empty word maps
/// to the identity.
BurauMatrix burau_of_word(const BraidWord3& w);

/// M^n by binary exponentiation, n >= 0; M^0 is the identity.
BurauMatrix matrix_power(const BurauMatrix& m, unsigned long n);

}  // namespace weave3
