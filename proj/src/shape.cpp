#include "weave3/shape.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "weave3/errors.hpp"
#include "weave3/weaving.hpp"

namespace weave3 {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kAberthBudget = 200;

// Extended-precision real type for certifying closed-form zeros.  At the
// outer real zeros |z| = phi^2 the polynomial's slope grows like phi^(4n)
// while the acceptance tolerance only grows like phi^(2n); double-precision
// Horner noise crosses the tolerance around n = 14, so the residual is
// measured in 100-digit arithmetic instead (integer coefficients up to
// ~10^41 convert exactly).
using BigFloat = boost::multiprecision::cpp_bin_float_100;

// Quad precision for polishing numeric roots.  A double root whose
// neighbours sit ~1e-2 away is only determined to ~1e-4 by double-precision
// arithmetic, which misses the tol^(1/2) clustering radius; the quad floor
// is orders of magnitude below it.
using QuadFloat = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

bool row_palindromic(const CoeffRow& row) {
  return std::equal(row.begin(), row.end(), row.rbegin());
}

// |row(x + iy)| for the polynomial with the given coefficient row, by
// complex Horner over BigFloat pairs.
BigFloat row_abs_at(const CoeffRow& row, const BigFloat& x, const BigFloat& y) {
  BigFloat re = 0, im = 0;
  for (std::size_t i = row.size(); i-- > 0;) {
    const BigFloat nre = re * x - im * y + BigFloat(row[i]);
    im = re * y + im * x;
    re = nre;
  }
  return sqrt(re * re + im * im);
}

struct PreciseZero {
  BigFloat re;
  BigFloat im;
};

// The closed-form zero for (n, k, branch) recomputed in extended precision.
PreciseZero precise_zero(long n, long k, int branch) {
  if (3 * k == n) return {1, 0};  // the exact tangency, z = 1
  static const BigFloat pi = 4 * atan(BigFloat(1));
  const BigFloat c = 2 * cos(2 * pi * k / n) - 1;
  const BigFloat disc = c * c - 4;
  if (disc > 0) {
    const BigFloat sq = sqrt(disc);
    return {(-c - branch * sq) / 2, 0};
  }
  const BigFloat sq = sqrt(-disc);
  return {-c / 2, -branch * sq / 2};
}

}  // namespace

TrapezoidReport trapezoid_check(const CoeffRow& row) {
  TrapezoidReport report;
  if (row.empty()) return report;

  report.is_positive = std::all_of(row.begin(), row.end(), [](const BigInt& v) { return v > 0; });

  report.is_log_concave = true;
  for (std::size_t k = 1; k + 1 < row.size(); ++k) {
    if (row[k] * row[k] < row[k - 1] * row[k + 1]) {
      report.is_log_concave = false;
      break;
    }
  }

  if (!report.is_positive) return report;  // non-positive rows are not trapezoidal

  std::size_t lo = 0;
  while (lo + 1 < row.size() && row[lo] < row[lo + 1]) ++lo;
  std::size_t hi = lo;
  while (hi + 1 < row.size() && row[hi] == row[hi + 1]) ++hi;
  std::size_t tail = hi;
  while (tail + 1 < row.size() && row[tail] > row[tail + 1]) ++tail;
  if (tail + 1 != row.size()) return report;  // a dip or rise after the plateau

  report.is_trapezoidal = true;
  report.plateau_lo = lo;
  report.plateau_hi = hi;
  if (row_palindromic(row) && (hi - lo) % 2 == 0) {
    report.r = static_cast<long>((hi - lo) / 2);
  }
  return report;
}

ZeroSet zeros_closed_form(long n) {
  if (n < 2) throw Error("zeros_closed_form requires n >= 2");
  ZeroSet zs;
  for (long k = 1; k <= n / 2; ++k) {
    // c = 2 cos(2 k pi / n) - 1; the discriminant c^2 - 4 vanishes exactly
    // when cos = -1/2, i.e. k/n = 1/3, so that case is decided integrally.
    if (3 * k == n) {
      zs.entries.push_back({k, 0, {1.0, 0.0}, true});
      continue;
    }
    const double c = 2.0 * std::cos(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n)) - 1.0;
    const double disc = c * c - 4.0;
    if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      zs.entries.push_back({k, +1, {-0.5 * (c + sq), 0.0}, true});
      zs.entries.push_back({k, -1, {-0.5 * (c - sq), 0.0}, true});
    } else {
      const double sq = std::sqrt(-disc);
      zs.entries.push_back({k, +1, {-0.5 * c, -0.5 * sq}, false});
      zs.entries.push_back({k, -1, {-0.5 * c, +0.5 * sq}, false});
    }
  }
  return zs;
}

bool hoste_check(const ZeroSet& zs, double tol) {
  if (tol <= 0.0) throw Error("hoste_check requires tol > 0");
  for (const ZeroEntry& e : zs.entries) {
    if (!(e.value.real() > -1.0)) return false;
    if (!e.is_real && std::fabs(std::abs(e.value) - 1.0) >= tol) return false;
  }
  return true;
}

namespace {

// One batch of Aberth sweeps over all approximants; returns after `budget`
// sweeps or once the largest relative step drops below `step_tol`.
template <typename Complex, typename Real>
void aberth_iterate(const std::vector<Real>& a, std::vector<Complex>& z, int budget,
                    const Real& step_tol) {
  const std::size_t degree = a.size() - 1;
  for (int sweep = 0; sweep < budget; ++sweep) {
    Real max_step = 0;
    for (std::size_t i = 0; i < degree; ++i) {
      Complex value = a[degree];
      Complex deriv = 0;
      for (std::size_t k = degree; k-- > 0;) {
        deriv = deriv * z[i] + value;
        value = value * z[i] + a[k];
      }
      if (value == Complex(0)) continue;
      const Complex w = (deriv == Complex(0)) ? value : value / deriv;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      }
      const Complex denom = Complex(1) - w * repulsion;
      const Complex step = (denom == Complex(0)) ? w : w / denom;
      z[i] -= step;
      max_step = (std::max)(max_step, Real(abs(step) / (1 + abs(z[i]))));
    }
    if (max_step < step_tol) break;
  }
}

}  // namespace

std::vector<std::complex<double>> numeric_roots(const LaurentPoly& p, double tol) {
  const LaurentPoly norm = p.canonical_unit_normalize();  // throws ZeroPolynomial
  const std::vector<BigInt>& ic = norm.coeffs();
  const std::size_t degree = ic.size() - 1;
  if (degree == 0) throw Error("numeric_roots: polynomial is constant after normalization");

  double maxc = 0.0;
  for (const BigInt& c : ic) maxc = std::max(maxc, std::fabs(to_double(c)));
  std::vector<double> a(ic.size());
  for (std::size_t i = 0; i < ic.size(); ++i) a[i] = to_double(ic[i]) / maxc;

  // Initial guesses on a circle of radius the geometric mean of the root
  // moduli, |a_0/a_d|^(1/d), with an asymmetric phase.
  const double radius = std::pow(std::fabs(a[0] / a[degree]), 1.0 / static_cast<double>(degree));
  std::vector<std::complex<double>> z(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const double angle = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(degree) + 0.7;
    z[i] = std::polar(radius * (1.0 + 0.05 * std::sin(static_cast<double>(3 * i + 1))), angle);
  }
  aberth_iterate(a, z, kAberthBudget, 5e-14);

  // Quad-precision polish from the double approximations: multiple roots in
  // tight clusters are only determined to ~1e-4 by double arithmetic.
  std::vector<QuadFloat> qa(ic.size());
  for (std::size_t i = 0; i < ic.size(); ++i) qa[i] = QuadFloat(ic[i]) / QuadFloat(maxc);
  std::vector<QuadComplex> qz(degree);
  for (std::size_t i = 0; i < degree; ++i) qz[i] = QuadComplex(z[i].real(), z[i].imag());
  aberth_iterate(qa, qz, 60, QuadFloat(1e-25));

  // Backward-stable residual validation, relative to sum_k |c_k| |r|^k.
  const QuadFloat bound_factor = (std::max)(tol, 1e-10);
  std::vector<std::complex<double>> out(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    QuadComplex value = qa[degree];
    for (std::size_t k = degree; k-- > 0;) value = value * qz[i] + qa[k];
    const QuadFloat r = abs(qz[i]);
    QuadFloat scale = abs(qa[degree]);
    for (std::size_t k = degree; k-- > 0;) scale = scale * r + abs(qa[k]);
    if (abs(value) > bound_factor * scale) {
      std::ostringstream os;
      os << "numeric_roots: residual " << abs(value).convert_to<double>() << " exceeds bound "
         << (bound_factor * scale).convert_to<double>() << " at root ("
         << qz[i].real().convert_to<double>() << ", " << qz[i].imag().convert_to<double>() << ")";
      throw NoConvergence(os.str());
    }
    out[i] = {qz[i].real().convert_to<double>(), qz[i].imag().convert_to<double>()};
  }
  return out;
}

bool weaving_zero_residuals_ok(long n, double tol, std::string* why) {
  if (n < 2) throw Error("weaving_zero_residuals_ok requires n >= 2");
  const CoeffRow alpha = alexander_weaving_recurrence(n);
  BigFloat max_alpha = 0;
  for (const BigInt& a : alpha) max_alpha = (std::max)(max_alpha, BigFloat(abs(a)));
  for (const ZeroEntry& e : zeros_closed_form(n).entries) {
    const PreciseZero z = precise_zero(n, e.k, e.branch);
    const BigFloat residual = row_abs_at(alpha, -z.re, -z.im);  // Delta(s = -z)
    if (residual >= tol * (1 + max_alpha)) {
      if (why) {
        std::ostringstream os;
        os << "closed-form zero (k=" << e.k << ", branch=" << e.branch
           << ") has |Delta| = " << residual.convert_to<double>();
        *why = os.str();
      }
      return false;
    }
  }
  return true;
}

bool cross_validate_zeros(long n, double tol, std::string* why) {
  if (n < 2) throw Error("cross_validate_zeros requires n >= 2");
  const auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };

  const CoeffRow alpha = alexander_weaving_recurrence(n);
  const ZeroSet zs = zeros_closed_form(n);

  // (a) each closed-form zero kills Delta up to coefficient-relative tolerance
  if (!weaving_zero_residuals_ok(n, tol, why)) return false;

  // (b) numeric roots of the t-variable polynomial cluster onto the
  // distinct closed-form values with total multiplicity 2n - 2
  std::vector<BigInt> tcoeffs = alpha;
  for (std::size_t i = 1; i < tcoeffs.size(); i += 2) tcoeffs[i] = -tcoeffs[i];
  const LaurentPoly delta_t = LaurentPoly::from_coeffs(std::move(tcoeffs), 0);
  const std::vector<std::complex<double>> roots = numeric_roots(delta_t, tol);
  if (roots.size() != static_cast<std::size_t>(2 * n - 2)) {
    return fail("numeric root count differs from 2n - 2");
  }

  std::vector<std::complex<double>> values;
  for (const ZeroEntry& e : zs.entries) values.push_back(e.value);
  std::vector<std::size_t> multiplicity(values.size(), 0);
  std::vector<std::size_t> assignment(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::size_t best = 0;
    double best_dist = std::abs(roots[i] - values[0]);
    for (std::size_t v = 1; v < values.size(); ++v) {
      const double dist = std::abs(roots[i] - values[v]);
      if (dist < best_dist) {
        best = v;
        best_dist = dist;
      }
    }
    assignment[i] = best;
    ++multiplicity[best];
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const std::size_t v = assignment[i];
    const double radius =
        std::max(1e-6, std::pow(tol, 1.0 / static_cast<double>(multiplicity[v])));
    if (std::abs(roots[i] - values[v]) > radius) {
      std::ostringstream os;
      os << "numeric root (" << roots[i].real() << ", " << roots[i].imag()
         << ") is not within " << radius << " of any closed-form zero";
      return fail(os.str());
    }
  }
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (multiplicity[v] == 0) {
      std::ostringstream os;
      os << "closed-form zero (" << values[v].real() << ", " << values[v].imag()
         << ") attracted no numeric root";
      return fail(os.str());
    }
  }
  return true;
}

}  // namespace weave3
