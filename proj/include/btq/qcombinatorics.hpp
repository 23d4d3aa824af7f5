#pragma once

// q-analog combinatorics: brackets, Gaussian binomials/multinomials, the
// degree polynomials of vertices in the PGL_n building, and the alternating
// multinomial identity
//
//   sum over compositions p of n of (-1)^len(p)/len(p) * [n; p]_q
//     = (-1)^n/n * [n-1]_q
//
// checked by exact finite summation in QRatFunc arithmetic (Andrews'
// identity; no generating-series machinery involved).
//
// Here [m]_q = (q^m - 1)(q^{m-1} - 1) ... (q - 1), with [0]_q = 1.

#include <vector>

#include "btq/compositions.hpp"
#include "btq/errors.hpp"
#include "btq/qpoly.hpp"
#include "btq/qratfunc.hpp"

namespace btq {

inline QPoly q_bracket(int m) {
  if (m < 0) fail(errc::invalid_parameter, "q_bracket needs m >= 0");
  QPoly r = QPoly::one();
  for (int j = 1; j <= m; ++j) r = r * (QPoly::monomial(BigInt(1), j) - QPoly::one());
  return r;
}

// [n; p]_q = [n]_q / prod_i [p_i]_q. Integrality of the quotient is enforced
// by the exact division, not assumed.
inline QPoly gauss_multinomial(int n, const Composition& p) {
  if (p.total() != n) fail(errc::invalid_parameter, "composition parts must sum to n");
  QPoly den = QPoly::one();
  for (int part : p.parts()) den = den * q_bracket(part);
  return div_exact(q_bracket(n), den);
}

inline QPoly gauss_binomial(int m, int k) {
  if (k < 0 || m < 0 || k > m) fail(errc::invalid_parameter, "gauss_binomial needs 0 <= k <= m");
  return div_exact(q_bracket(m), q_bracket(k) * q_bracket(m - k));
}

// Number of i-simplices containing a fixed vertex, as a polynomial in q:
// the sum of [n; p]_q over compositions p of n with i+1 parts.
inline QPoly vertex_degree(int n, int i) {
  if (n < 2) fail(errc::invalid_parameter, "vertex_degree needs n >= 2");
  if (i < 1 || i > n - 1) fail(errc::invalid_parameter, "vertex_degree needs 1 <= i <= n-1");
  QPoly sum;
  for (const auto& p : compositions(n, i + 1)) sum = sum + gauss_multinomial(n, p);
  return sum;
}

struct AndrewsReport {
  QRatFunc lhs;
  QRatFunc rhs;
  bool equal;
};

inline AndrewsReport andrews_check(int n) {
  if (n < 1) fail(errc::invalid_parameter, "andrews_check needs n >= 1");
  QRatFunc lhs;
  for (const auto& p : compositions(n)) {
    int len = p.length();
    BigRat coef(len % 2 ? -1 : 1, len);
    lhs = lhs + QRatFunc(gauss_multinomial(n, p)).scale(coef);
  }
  BigRat rcoef(n % 2 ? -1 : 1, n);
  QRatFunc rhs = QRatFunc(q_bracket(n - 1)).scale(rcoef);
  return {lhs, rhs, lhs == rhs};
}

}  // namespace btq
