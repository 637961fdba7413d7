#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace fermigas {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.template convert_to<double>(); }

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  return Rational(std::move(num)) / Rational(std::move(den));
}

// C(n, k) with the usual boundary convention: zero for k < 0 or k > n.
inline Integer binomial_integer(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: n >= 0 required");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer c = 1;
  for (long long i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;  // exact: c equals C(n, i+1) after this step
  }
  return c;
}

inline Rational binomial(long long n, long long k) { return Rational(binomial_integer(n, k)); }

inline Integer factorial(long long n) {
  if (n < 0) throw std::domain_error("factorial: n >= 0 required");
  Integer f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Rising factorial (a)_k = a (a+1) ... (a+k-1).
inline Rational pochhammer(const Rational& a, long long k) {
  if (k < 0) throw std::domain_error("pochhammer: k >= 0 required");
  Rational p = 1;
  Rational x = a;
  for (long long i = 0; i < k; ++i, x += 1) p *= x;
  return p;
}

// (d/2)_k. Half-integer Gamma ratios are always kept in this product form so
// the sqrt(pi) factors that would appear in Gamma evaluations never arise.
inline Rational pochhammer_half(long long d, long long k) {
  if (d < 1) throw std::domain_error("pochhammer_half: d >= 1 required");
  return pochhammer(make_rational(d, 2), k);
}

inline Rational catalan(long long k) {
  if (k < 0) throw std::domain_error("catalan: k >= 0 required");
  return make_rational(binomial_integer(2 * k, k), k + 1);
}

// 2^e for any integer e.
inline Rational pow2(long long e) {
  Integer p = Integer(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

inline Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rational_pow: zero base, negative exponent");
    return Rational(1) / rational_pow(base, -e);
  }
  Rational r = 1;
  Rational b = base;
  long long n = e;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

}  // namespace fermigas
