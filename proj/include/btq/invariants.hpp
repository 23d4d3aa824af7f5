#pragma once

// The arithmetic pipeline: optimal-embedding counts, covolume, the
// Euler-Poincare characteristic of the quotient (numeric and as a polynomial
// in q), cohomology dimensions, and the simplex counts theta_i obtained from
// the linear relation between chi and the vertex degrees.
//
// Everything is exact. Quantities that the theory promises to be integers
// are checked, and a failed check raises an error instead of rounding.

#include <optional>
#include <utility>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"
#include "btq/qcombinatorics.hpp"
#include "btq/qpoly.hpp"
#include "btq/ramification.hpp"
#include "btq/simplicial.hpp"

namespace btq::arith {

inline int wp(int deg_x, int m) {
  if (deg_x < 1 || m < 1) fail(errc::invalid_parameter, "wp needs positive arguments");
  return std::gcd(deg_x, m) == 1 ? 1 : 0;
}

inline int wp_product(const std::vector<int>& degrees, int m) {
  int r = 1;
  for (int deg : degrees) r *= wp(deg, m);
  return r;
}

inline int wp_product(const RamificationData& d, int m) { return wp_product(d.degrees, m); }

// a degree-m subfield of the function field embeds into the division algebra
// iff m divides n and no ramified place degree shares a factor with m
inline bool embeds_subfield(const RamificationData& d, int m) {
  if (m < 1) fail(errc::invalid_parameter, "subfield degree must be positive");
  if (d.n % m != 0) return false;
  return wp_product(d, m) == 1;
}

struct EmbeddingReport {
  std::vector<BigInt> local_m;  // per place, parallel to degrees
  BigInt mB = 0;                // global optimal embedding count
  BigInt W = 0;                 // vertex orbits with the large stabilizer
  std::vector<std::pair<int, bool>> subfields;  // divisor of n -> embeds
};

inline EmbeddingReport embedding_numbers(const RamificationData& d) {
  require_valid(d);
  require_prime_n(d);
  EmbeddingReport r;
  r.mB = 1;
  for (int deg : d.degrees) {
    BigInt mx = BigInt(wp(deg, d.n)) * d.n;
    r.local_m.push_back(mx);
    r.mB *= mx;
  }
  r.W = r.mB / d.n;
  for (int m = 1; m <= d.n; ++m)
    if (d.n % m == 0) r.subfields.emplace_back(m, embeds_subfield(d, m));
  return r;
}

namespace detail {

inline BigInt bracket_at(int m, const BigInt& q) { return q_bracket(m).eval_int(q); }

inline BigInt qx(const RamificationData& d, int deg) {
  return big_pow(BigInt(d.q), static_cast<unsigned>(deg));
}

}  // namespace detail

inline BigRat volume(const RamificationData& d) {
  require_valid(d);
  require_prime_n(d);
  const BigInt q(d.q);
  BigRat v(BigInt(d.n) * (q - 1));
  v /= BigRat(detail::bracket_at(d.n - 1, q) * detail::bracket_at(d.n, q));
  for (int deg : d.degrees) v *= BigRat(detail::bracket_at(d.n - 1, detail::qx(d, deg)));
  return v;
}

// chi as an exact rational, with no primality requirement on n; the prime-n
// theorem does not apply, so non-integer values are expected output here.
// Only the shape of the data is checked: this is the diagnostic entry point,
// and it evaluates the expression blindly even where no algebra exists.
inline BigRat chi_raw(const RamificationData& d) {
  require_structural(d);
  const BigInt q(d.q);
  const BigInt qn = big_pow(q, static_cast<unsigned>(d.n));
  BigRat first((d.n % 2 == 0 ? BigInt(-1) : BigInt(1)) * (q - 1),
               detail::bracket_at(d.n, q));
  for (int deg : d.degrees) first *= BigRat(detail::bracket_at(d.n - 1, detail::qx(d, deg)));
  BigInt W = big_pow(BigInt(d.n), static_cast<unsigned>(d.degrees.size()) - 1) *
             wp_product(d, d.n);
  BigRat second = BigRat(W) * (BigRat(1) - BigRat(q - 1, qn - 1));
  return first + second;
}

// chi with q left formal: a single exact polynomial division certifies
// integrality for every q at once
inline QPoly chi_symbolic(int n, const std::vector<int>& degrees) {
  detail::require_ok(validate_structure(n, degrees));
  require_prime_n(n);

  auto bracket_pow = [&](int m, int deg) {
    // [m] with q^deg in place of q
    QPoly r = QPoly::one();
    for (int j = 1; j <= m; ++j) r = r * (QPoly::monomial(1, deg * j) - QPoly::one());
    return r;
  };

  const QPoly qn = QPoly::monomial(1, n);
  QPoly num = QPoly::one();
  for (int deg : degrees) num = num * bracket_pow(n - 1, deg);
  num = num * (QPoly::var() - QPoly::one());
  if (n % 2 == 0) num = -num;
  BigInt W = big_pow(BigInt(n), static_cast<unsigned>(degrees.size()) - 1) *
             wp_product(degrees, n);
  num = num + (qn - QPoly::var()).times(W) * bracket_pow(n - 1, 1);
  QPoly den = (qn - QPoly::one()) * bracket_pow(n - 1, 1);

  QPoly poly = div_exact(num, den);
  if (poly.constant_term() != 1)
    fail(errc::internal_check_failed, "chi polynomial must have constant term 1");
  return poly;
}

struct ChiReport {
  BigRat volume;
  BigInt chi = 0;
  std::optional<QPoly> chi_poly;
  BigInt W = 0;
  BigInt stab_generic = 0;  // all simplex stabilizers except W vertex orbits
  BigInt stab_special = 0;  // the W special vertex orbits
  bool congruence_ok = false;
  std::vector<BigInt> h;    // cohomology dimensions h^0 .. h^{n-1}
};

inline ChiReport chi(const RamificationData& d, bool with_symbolic = false) {
  require_valid(d);
  require_prime_n(d);
  ChiReport r;
  r.volume = volume(d);

  BigRat value = chi_raw(d);
  if (!is_integer(value))
    fail(errc::integrality_failure, "chi evaluated to the non-integer " + rat_string(value));
  r.chi = rat_num(value);

  const BigInt q(d.q);
  r.W = big_pow(BigInt(d.n), static_cast<unsigned>(d.degrees.size()) - 1) *
        wp_product(d, d.n);
  r.stab_generic = q - 1;
  r.stab_special = big_pow(q, static_cast<unsigned>(d.n)) - 1;
  r.congruence_ok = ((((r.chi - 1) % q) + q) % q) == 0;

  r.h.assign(static_cast<size_t>(d.n), BigInt(0));
  r.h[0] = 1;
  BigInt top = (d.n % 2 == 0 ? BigInt(-1) : BigInt(1)) * (r.chi - 1);
  if (top < 0)
    fail(errc::internal_check_failed, "top cohomology dimension came out negative");
  r.h[static_cast<size_t>(d.n) - 1] = top;

  if (with_symbolic) {
    QPoly poly = chi_symbolic(d.n, d.degrees);
    if (poly.eval_int(q) != r.chi)
      fail(errc::internal_check_failed, "symbolic chi disagrees with the numeric value");
    r.chi_poly = std::move(poly);
  }
  return r;
}

struct ThetaReport {
  std::vector<BigInt> theta;  // theta_0 .. theta_{n-1}
  bool closed_form_used = false;
};

// Solve for the simplex counts: chi = sum (-1)^i theta_i together with
// theta_i = (D_i/(i+1)) * (theta_0 + c) for i >= 1, where D_i is the number
// of i-simplices at a vertex and c = W(q-1)/(q^n-1) - W.
inline ThetaReport theta(const RamificationData& d) {
  require_valid(d);
  require_prime_n(d);
  const int n = d.n;
  const BigInt q(d.q);
  const BigInt qn = big_pow(q, static_cast<unsigned>(n));

  ChiReport cr = chi(d);
  const BigRat W(cr.W);
  const BigRat c = W * BigRat(q - 1, qn - 1) - W;

  std::vector<BigRat> s(static_cast<size_t>(n));  // s[i] = D_i/(i+1), s[0] unused
  BigRat b(0);
  for (int i = 1; i <= n - 1; ++i) {
    BigInt di = vertex_degree(n, i).eval_int(q);
    s[static_cast<size_t>(i)] = BigRat(di, BigInt(i + 1));
    if (i % 2)
      b -= s[static_cast<size_t>(i)];
    else
      b += s[static_cast<size_t>(i)];
  }

  // the theta_0 coefficient has a product form; check it numerically
  BigRat expect(detail::bracket_at(n - 1, q), BigInt(n));
  if (n % 2 == 0) expect = -expect;
  if (BigRat(1) + b != expect)
    fail(errc::internal_check_failed, "theta_0 coefficient mismatch");

  BigRat theta0 = (BigRat(cr.chi) - c * b) / (BigRat(1) + b);
  ThetaReport r;
  auto push = [&](const BigRat& v, int i) {
    if (!is_integer(v) || rat_num(v) <= 0)
      fail(errc::non_integral_theta,
           "theta_" + std::to_string(i) + " = " + rat_string(v) + " is not a positive integer");
    r.theta.push_back(rat_num(v));
  };
  push(theta0, 0);
  for (int i = 1; i <= n - 1; ++i) push(s[static_cast<size_t>(i)] * (theta0 + c), i);

  BigInt alt(0);
  for (int i = 0; i < n; ++i)
    alt += (i % 2 ? -r.theta[static_cast<size_t>(i)] : r.theta[static_cast<size_t>(i)]);
  if (alt != cr.chi)
    fail(errc::internal_check_failed, "alternating theta sum does not reproduce chi");

  if (d.degrees == std::vector<int>{1, 1}) {
    r.closed_form_used = true;
    if (r.theta[0] != n) fail(errc::internal_check_failed, "closed form expects theta_0 = n");
    for (int i = 1; i <= n - 1; ++i) {
      BigRat cf = BigRat(BigInt(n), BigInt(i + 1)) * BigRat(q - 1, qn - 1) *
                  BigRat(vertex_degree(n, i).eval_int(q));
      if (!is_integer(cf) || rat_num(cf) != r.theta[static_cast<size_t>(i)])
        fail(errc::internal_check_failed, "closed form disagrees with the solved theta");
    }
  }
  return r;
}

// The quotient for two degree-one places, built explicitly: a segment for
// n = 2, and for n = 3 a triangle shell carrying q+1 parallel faces. Counts
// and chi are cross-checked against the arithmetic before returning.
inline simplicial::Complex multilayer_demo(int n, long long q) {
  if (q < 2) fail(errc::invalid_parameter, "q must be at least 2");
  if (n != 2 && n != 3)
    fail(errc::unsupported, "the gluing pattern is only specified for n = 2 and n = 3");

  std::vector<simplicial::VertexRec> verts;
  std::vector<simplicial::SimplexRec> simps;
  if (n == 2) {
    verts = {{0, ""}, {1, ""}};
    simps = {{0, {0, 1}}};
  } else {
    verts = {{0, ""}, {1, ""}, {2, ""}};
    simps = {{0, {0, 1}}, {1, {0, 2}}, {2, {1, 2}}};
    for (long long k = 0; k <= q; ++k)
      simps.push_back({static_cast<int>(k), {0, 1, 2}});
  }
  auto x = simplicial::Complex::build(std::move(verts), std::move(simps));

  RamificationData d = make_data(q, n, {1, 1});
  ThetaReport t = theta(d);
  ChiReport c = chi(d);
  if (BigInt(x.vertex_count()) != t.theta[0])
    fail(errc::internal_check_failed, "demo vertex count disagrees with theta_0");
  for (int i = 1; i < n; ++i)
    if (BigInt(x.simplex_count(i)) != t.theta[static_cast<size_t>(i)])
      fail(errc::internal_check_failed, "demo simplex count disagrees with theta");
  if (x.euler_characteristic() != c.chi)
    fail(errc::internal_check_failed, "demo Euler characteristic disagrees with chi");
  return x;
}

}  // namespace btq::arith
