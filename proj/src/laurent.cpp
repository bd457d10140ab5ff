#include "weave3/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace weave3 {

namespace {

const BigInt kZero = 0;

std::complex<double> cpow_int(std::complex<double> z, long e) {
  if (e < 0) return 1.0 / cpow_int(z, -e);
  std::complex<double> acc = 1.0;
  while (e > 0) {
    if (e & 1) acc *= z;
    z *= z;
    e >>= 1;
  }
  return acc;
}

}  // namespace

int GaussianInt::unit_log_i() const {
  if (re == 1 && im == 0) return 0;
  if (re == 0 && im == 1) return 1;
  if (re == -1 && im == 0) return 2;
  if (re == 0 && im == -1) return 3;
  throw NonUnitPoint("eval_gauss: point is not one of 1, -1, i, -i");
}

GaussianInt GaussianInt::i_power(long r) {
  switch (((r % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

LaurentPoly::LaurentPoly(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt c, long exp) {
  LaurentPoly p;
  if (c != 0) {
    p.coeffs_.push_back(std::move(c));
    p.offset_ = exp;
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::vector<BigInt> coeffs, long offset) {
  LaurentPoly p;
  p.coeffs_ = std::move(coeffs);
  p.offset_ = offset;
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t lo = 0;
  while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
  if (lo == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t hi = coeffs_.size();
  while (coeffs_[hi - 1] == 0) --hi;
  if (lo > 0 || hi < coeffs_.size()) {
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<long>(lo),
                                  coeffs_.begin() + static_cast<long>(hi));
    offset_ += static_cast<long>(lo);
  }
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw ZeroPolynomial("max_exp of the zero polynomial");
  return offset_ + static_cast<long>(coeffs_.size()) - 1;
}

const BigInt& LaurentPoly::coeff(long exp) const {
  if (is_zero() || exp < offset_ || exp > max_exp()) return kZero;
  return coeffs_[static_cast<std::size_t>(exp - offset_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const long lo = std::min(offset_, o.offset_);
  const long hi = std::max(max_exp(), o.max_exp());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    sum[static_cast<std::size_t>(offset_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    sum[static_cast<std::size_t>(o.offset_ - lo) + i] += o.coeffs_[i];
  return from_coeffs(std::move(sum), lo);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> prod(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_coeffs(std::move(prod), offset_ + o.offset_);
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.offset_ += k;
  return r;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
  if (d.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (is_zero()) return {};
  if (coeffs_.size() < d.coeffs_.size()) {
    throw NonExactDivision("quotient would have negative degree span");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::vector<BigInt>& dc = d.coeffs_;
  const std::size_t qlen = rem.size() - dc.size() + 1;
  std::vector<BigInt> q(qlen);
  for (std::size_t i = 0; i < qlen; ++i) {
    if (rem[i] == 0) continue;
    BigInt qi, r;
    boost::multiprecision::divide_qr(rem[i], dc[0], qi, r);
    if (r != 0) {
      throw NonExactDivision("nonzero remainder at exponent " +
                             std::to_string(offset_ - d.offset_ + static_cast<long>(i)));
    }
    q[i] = qi;
    for (std::size_t j = 0; j < dc.size(); ++j) rem[i + j] -= qi * dc[j];
  }
  for (std::size_t i = qlen; i < rem.size(); ++i) {
    if (rem[i] != 0) {
      throw NonExactDivision("nonzero trailing remainder at exponent " +
                             std::to_string(offset_ + static_cast<long>(i)));
    }
  }
  return from_coeffs(std::move(q), offset_ - d.offset_);
}

BigRational LaurentPoly::eval_int(const BigInt& v) const {
  if (is_zero()) return 0;
  if (v == 0) {
    if (offset_ < 0) throw ZeroDenominator("eval_int at 0 with negative exponents");
    return offset_ == 0 ? BigRational(coeffs_[0]) : BigRational(0);
  }
  BigInt horner = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) horner = horner * v + coeffs_[i];
  if (offset_ >= 0) {
    BigInt scale = 1;
    for (long i = 0; i < offset_; ++i) scale *= v;
    return BigRational(horner * scale);
  }
  BigInt den = 1;
  for (long i = 0; i < -offset_; ++i) den *= v;
  return BigRational(horner, den);
}

GaussianInt LaurentPoly::eval_gauss(const GaussianInt& v) const {
  const int u = v.unit_log_i();
  GaussianInt acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long exp = offset_ + static_cast<long>(i);
    const GaussianInt unit = GaussianInt::i_power(u * exp);
    acc.re += coeffs_[i] * unit.re;
    acc.im += coeffs_[i] * unit.im;
  }
  return acc;
}

std::complex<double> LaurentPoly::eval_complex(std::complex<double> z) const {
  if (is_zero()) return 0.0;
  if (z == std::complex<double>(0.0, 0.0)) {
    if (offset_ < 0) throw ZeroDenominator("eval_complex at 0 with negative exponents");
    return offset_ == 0 ? to_double(coeffs_[0]) : 0.0;
  }
  std::complex<double> horner = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) horner = horner * z + to_double(coeffs_[i]);
  return horner * cpow_int(z, offset_);
}

LaurentPoly LaurentPoly::substitute_negate() const {
  LaurentPoly r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if ((offset_ + static_cast<long>(i)) & 1) r.coeffs_[i] = -r.coeffs_[i];
  }
  return r;
}

LaurentPoly LaurentPoly::canonical_unit_normalize() const {
  if (is_zero()) throw ZeroPolynomial("canonical_unit_normalize of the zero polynomial");
  LaurentPoly r = *this;
  r.offset_ = 0;
  if (r.coeffs_.front() < 0) {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

bool LaurentPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPoly LaurentPoly::with_doubled_exponents() const {
  if (is_zero()) return {};
  std::vector<BigInt> stretched(coeffs_.size() * 2 - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) stretched[2 * i] = coeffs_[i];
  return from_coeffs(std::move(stretched), 2 * offset_);
}

LaurentPoly LaurentPoly::with_halved_exponents() const {
  if (is_zero()) return {};
  std::vector<BigInt> packed;
  packed.reserve(coeffs_.size() / 2 + 1);
  if (offset_ & 1) throw Error("with_halved_exponents: odd exponent present");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const long exp = offset_ + static_cast<long>(i);
    if (exp & 1) {
      if (coeffs_[i] != 0) throw Error("with_halved_exponents: odd exponent present");
    } else {
      packed.push_back(coeffs_[i]);
    }
  }
  return from_coeffs(std::move(packed), offset_ / 2);
}

std::string LaurentPoly::str(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const long exp = offset_ + static_cast<long>(i);
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || exp == 0) os << mag.str();
    if (exp != 0) {
      if (mag != 1) os << "*";
      os << variable;
      if (exp != 1) os << "^" << exp;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace weave3
