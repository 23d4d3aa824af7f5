#pragma once

// Dense polynomials in the formal variable q with BigInt coefficients.
// Division is exact-or-error: anything that expects divisibility gets a
// NotDivisible error instead of a silently rational result.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"

namespace btq {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit QPoly(long long constant) : QPoly(BigInt(constant)) {}
  explicit QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(BigInt(1)); }
  static QPoly var() { return monomial(BigInt(1), 1); }

  static QPoly monomial(BigInt coeff, int degree) {
    QPoly r;
    if (coeff == 0) return r;
    r.c_.assign(static_cast<size_t>(degree) + 1, BigInt(0));
    r.c_.back() = std::move(coeff);
    return r;
  }

  bool is_zero() const { return c_.empty(); }

  // The zero polynomial has no degree; callers must handle the sentinel.
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const std::vector<BigInt>& coeffs() const { return c_; }

  BigInt coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return BigInt(0);
    return c_[static_cast<size_t>(k)];
  }

  BigInt constant_term() const { return coeff(0); }
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }

  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  QPoly times(const BigInt& k) const {
    if (k == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
  }

  // multiply by q^k
  QPoly shifted(int k) const {
    if (is_zero()) return QPoly();
    QPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
  }

  QPoly pow(unsigned e) const {
    QPoly r = one();
    QPoly base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  BigRat eval(const BigRat& v) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + BigRat(*it);
    return acc;
  }

  BigInt eval_int(const BigInt& v) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  bool operator==(const QPoly&) const = default;

  // Human form, e.g. "q^3 - 2*q + 1"; "0" for the zero polynomial.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
      const BigInt& a = c_[static_cast<size_t>(k)];
      if (a == 0) continue;
      BigInt mag = a < 0 ? BigInt(-a) : a;
      if (s.empty()) {
        if (a < 0) s += "-";
      } else {
        s += a < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) s += mag.str();
      if (k > 0) {
        if (mag != 1) s += "*";
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;  // ascending powers, no trailing zeros
};

// Exact quotient a/b over the integer polynomials. Throws NotDivisible if the
// quotient does not exist with integer coefficients (which covers both
// "divides over Q with fractional quotient" and "does not divide at all").
inline QPoly div_exact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(errc::zero_denominator, "polynomial division by zero");
  if (a.is_zero()) return QPoly();
  const int db = *b.degree();
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo;
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - static_cast<size_t>(db), BigInt(0));
  auto top = [&rem]() {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    return static_cast<int>(rem.size()) - 1;
  };
  for (int dr = top(); dr >= db; dr = top()) {
    if (rem.back() % b.leading() != 0)
      fail(errc::not_divisible, "quotient of " + a.str() + " by " + b.str() +
                                    " is not an integer polynomial");
    BigInt c = rem.back() / b.leading();
    int k = dr - db;
    quo[static_cast<size_t>(k)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= c * b.coeff(j);
  }
  if (top() >= 0)
    fail(errc::not_divisible, b.str() + " does not divide " + a.str());
  return QPoly(std::move(quo));
}

inline BigInt content(const QPoly& p) {
  BigInt g(0);
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;  // 0 for the zero polynomial
}

// Content removed and leading coefficient made positive.
inline QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) x /= g;
  return QPoly(std::move(c));
}

namespace detail {
// Pseudo-remainder of a by b: lead(b)^(da-db+1) * a reduced mod b, all over
// the integers. Standard primitive-PRS building block.
inline QPoly pseudo_rem(QPoly a, const QPoly& b) {
  const int db = *b.degree();
  const BigInt lb = b.leading();
  while (!a.is_zero() && *a.degree() >= db) {
    int k = *a.degree() - db;
    BigInt la = a.leading();
    a = a.times(lb) - b.times(la).shifted(k);
  }
  return a;
}
}  // namespace detail

// gcd over Q, returned as a primitive integer polynomial with positive
// leading coefficient (primitive pseudo-remainder sequence).
inline QPoly gcd_primitive(QPoly a, QPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (*a.degree() < *b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = primitive_part(detail::pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace btq
