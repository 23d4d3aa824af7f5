#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace btq {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced with a positive denominator, which is exactly the invariant the
// rest of the library relies on.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt rat_num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const BigRat& r) { return rat_den(r) == 1; }

// "n" for integers, "num/den" otherwise; the CLI's rational serialization.
inline std::string rat_string(const BigRat& r) {
  if (is_integer(r)) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Moebius mu: 0 on non-squarefree n, else (-1)^(number of prime factors).
inline int mobius(long long n) {
  int sign = 1;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// q = p^k for a prime p and k >= 1?
inline bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;  // q itself is prime
}

}  // namespace btq
