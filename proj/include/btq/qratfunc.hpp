#pragma once

// Rational functions in q as canonical pairs of integer polynomials.
//
// Normal form: the polynomial gcd over Q is removed, numerator and
// denominator are jointly primitive (the gcd of all coefficients across both
// is 1), and the denominator has a positive leading coefficient. Two equal
// rational functions therefore have structurally equal representations, so
// operator== is coefficient comparison.

#include <string>
#include <utility>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"
#include "btq/qpoly.hpp"

namespace btq {

class QRatFunc {
 public:
  QRatFunc() : num_(), den_(QPoly::one()) {}
  explicit QRatFunc(QPoly p) : num_(std::move(p)), den_(QPoly::one()) {}
  QRatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static QRatFunc from_rational(const BigRat& r) {
    return QRatFunc(QPoly(rat_num(r)), QPoly(rat_den(r)));
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
    return QRatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFunc operator-(const QRatFunc& a, const QRatFunc& b) {
    return QRatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  QRatFunc operator-() const {
    QRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
    return QRatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRatFunc operator/(const QRatFunc& a, const QRatFunc& b) {
    if (b.is_zero()) fail(errc::zero_denominator, "rational function division by zero");
    return QRatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }

  // Multiply by an exact rational scalar; the scalar is folded into the pair
  // before renormalizing, so 1/3 * (q^2-1)/(q-1) comes out as (q+1)/3.
  QRatFunc scale(const BigRat& r) const {
    return QRatFunc(num_.times(rat_num(r)), den_.times(rat_den(r)));
  }

  bool operator==(const QRatFunc&) const = default;

  std::string str() const {
    if (den_ == QPoly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) fail(errc::zero_denominator, "rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly::one();
      return;
    }
    QPoly g = gcd_primitive(num_, den_);
    if (g.degree().value_or(0) > 0) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
    BigInt k = boost::multiprecision::gcd(content(num_), content(den_));
    if (den_.leading() < 0) k = -k;
    if (k != 1) {
      std::vector<BigInt> cn = num_.coeffs(), cd = den_.coeffs();
      for (auto& x : cn) x /= k;
      for (auto& x : cd) x /= k;
      num_ = QPoly(std::move(cn));
      den_ = QPoly(std::move(cd));
    }
  }

  QPoly num_, den_;
};

}  // namespace btq
