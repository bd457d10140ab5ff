#include "weave3/bigint.hpp"

#include "weave3/errors.hpp"

namespace weave3 {

BigInt factorial(long n) {
  BigInt acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

BigInt binomial(long a, long b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt acc = 1;
  for (long i = 1; i <= b; ++i) {
    acc *= a - b + i;
    acc /= i;  // exact at every step: acc is C(a-b+i, i)
  }
  return acc;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InternalMismatch("exact_quotient: " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace weave3
