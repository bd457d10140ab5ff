#include "weave3/invariants.hpp"

namespace weave3 {

namespace {

const LaurentPoly kCyclotomic3 =
    LaurentPoly::from_coeffs({1, 1, 1}, 0);  // (1 - t^3)/(1 - t) = 1 + t + t^2

}  // namespace

InvariantValue alexander(const BraidWord3& w) {
  const BurauMatrix m = burau_of_word(w);
  const LaurentPoly d = LaurentPoly(1) - m.trace() + m.det();
  if (d.is_zero()) {
    // Split closure: Alexander polynomial vanishes identically.
    return {LaurentPoly(), Variable::t, true};
  }
  const LaurentPoly q = d.exact_div(kCyclotomic3);
  return {q.canonical_unit_normalize(), Variable::t, true};
}

InvariantValue jones(const BraidWord3& w) {
  const BurauMatrix m = burau_of_word(w);
  const long e = w.exponent_sum();
  LaurentPoly body = m.trace().with_doubled_exponents() + LaurentPoly::monomial(1, 2) +
                     LaurentPoly::monomial(1, -2);
  LaurentPoly value = body.shifted(e);  // times (-x)^e
  if (e & 1) value = -value;
  return {value, Variable::x, false};
}

BigInt determinant(const BraidWord3& w) {
  // Route 1: Jones value at x = i, i.e. t = -1, exactly.
  const GaussianInt v = jones(w).poly.eval_gauss(GaussianInt(0, 1));
  if (v.re != 0 && v.im != 0) {
    throw InternalMismatch("determinant: Jones value at x = i is not real up to a unit");
  }
  const BigInt via_jones = abs(v.re != 0 ? v.re : v.im);

  // Route 2: canonical Alexander polynomial at t = -1.
  const InvariantValue alex = alexander(w);
  BigInt via_alexander = 0;
  if (!alex.poly.is_zero()) {
    const BigRational r = alex.poly.eval_int(BigInt(-1));
    via_alexander = abs(numerator(r));  // offset 0 after normalization, so integral
  }

  if (via_jones != via_alexander) {
    throw InternalMismatch("determinant: |V(-1)| = " + via_jones.str() +
                           " but |Delta(-1)| = " + via_alexander.str());
  }
  return via_jones;
}

LaurentPoly jones_in_t(const InvariantValue& v) {
  return v.poly.with_halved_exponents();
}

LaurentPoly alexander_s_form(const InvariantValue& v) {
  if (v.poly.is_zero()) return {};
  return v.poly.substitute_negate().canonical_unit_normalize();
}

}  // namespace weave3
