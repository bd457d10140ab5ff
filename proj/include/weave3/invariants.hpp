#pragma once

#include "weave3/braid.hpp"

namespace weave3 {

/// A link invariant as an exact Laurent polynomial together with the
/// variable convention it is expressed in and whether it has been reduced
/// to canonical unit form.
struct InvariantValue {
  LaurentPoly poly;
  Variable variable = Variable::t;
  bool normalized = false;

  bool operator==(const InvariantValue&) const = default;
};

/// Alexander polynomial of the closure of w, in variable t, canonical unit
/// form.  Computed as det(I - psi_t(w)) = 1 - tr + det, divided exactly by
/// 1 + t + t^2; the half-integer unit prefactor is absorbed by the
/// normalization.  Split closures yield the zero polynomial.
/// Throws NonExactDivision only on an internal defect.
InvariantValue alexander(const BraidWord3& w);

/// Jones polynomial of the closure of w via the Burau trace formula, exact
/// in the variable x with x^2 = t so odd exponent sums need no branch cuts:
/// (-x)^e (x^2 + x^-2 + tr(psi_{t=x^2}(w))).  Not normalized; Jones is an
/// honest invariant rather than an up-to-units one.
InvariantValue jones(const BraidWord3& w);

/// Link determinant |V(-1)| computed exactly over Gaussian integers at
/// x = i, cross-checked against |Delta(-1)| from the Alexander route.
/// Throws InternalMismatch if the two routes disagree.
BigInt determinant(const BraidWord3& w);

/// Jones value of a word with even exponent sum rewritten in integer
/// t-powers.  Throws if an odd x-exponent carries a nonzero coefficient.
LaurentPoly jones_in_t(const InvariantValue& v);

/// Alexander row in the positive s = -t convention: substitute and
/// re-normalize so alternating t-signs become an all-positive s-row.
LaurentPoly alexander_s_form(const InvariantValue& v);

}  // namespace weave3
