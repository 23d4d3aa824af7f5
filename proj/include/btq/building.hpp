#pragma once

// Desk-scale enumeration in the Bruhat-Tits building of PGL_n over the field
// of Laurent series F_p((pi)).
//
// A vertex is a homothety class of rank-n lattices over O = F_p[[pi]]. A
// class is stored by its canonical representative: the unique basis matrix
// (rows are basis vectors) that is upper triangular with diagonal pi^{d_1},
// ..., pi^{d_n}, entries above a pivot reduced modulo the pivot of their
// column, normalized so the minimum valuation over all entries is zero. The
// canonical data (exponents plus reduced polynomial entries) is finite and
// precision-free, so equality of classes is bit equality.
//
// Arithmetic runs modulo pi^prec. Eliminations divide by pivot powers, which
// costs certified precision; the computation tracks what it spends and raises
// PrecisionExceeded rather than returning uncertified digits.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "btq/errors.hpp"
#include "btq/fpspace.hpp"
#include "btq/numbers.hpp"
#include "btq/simplicial.hpp"

namespace btq::building {

inline constexpr long long kMaxFieldPoints = 4096;  // p^n guard
inline constexpr size_t kMaxBallVertices = 100000;
inline constexpr size_t kMaxBallSimplices = 500000;

// Truncated element of O/pi^prec: coefficient c[k] of pi^k, entries mod p.
struct PiSeries {
  uint32_t p = 2;
  std::vector<uint32_t> c;

  int prec() const { return static_cast<int>(c.size()); }

  // valuation; prec() means "zero as far as this precision can tell"
  int ord() const {
    for (size_t k = 0; k < c.size(); ++k)
      if (c[k] % p != 0) return static_cast<int>(k);
    return prec();
  }

  static PiSeries from_poly(uint32_t p, int prec, const std::vector<uint32_t>& poly) {
    PiSeries s;
    s.p = p;
    s.c.assign(static_cast<size_t>(prec), 0);
    for (size_t k = 0; k < poly.size() && k < s.c.size(); ++k) s.c[k] = poly[k] % p;
    return s;
  }
};

struct PiMatrix {
  uint32_t p = 2;
  int prec = 1;
  int rows = 0, cols = 0;
  std::vector<std::vector<std::vector<uint32_t>>> a;  // a[i][j]: coeff vector, size prec

  static PiMatrix zero(uint32_t p, int prec, int rows, int cols) {
    PiMatrix m;
    m.p = p;
    m.prec = prec;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows),
               std::vector<std::vector<uint32_t>>(static_cast<size_t>(cols),
                                                  std::vector<uint32_t>(static_cast<size_t>(prec), 0)));
    return m;
  }

  static PiMatrix identity(uint32_t p, int prec, int n) {
    PiMatrix m = zero(p, prec, n, n);
    for (int i = 0; i < n; ++i) m.a[static_cast<size_t>(i)][static_cast<size_t>(i)][0] = 1;
    return m;
  }

  // entries as polynomial coefficient lists, truncated to prec
  static PiMatrix from_polys(uint32_t p, int prec, const std::vector<std::vector<std::vector<uint32_t>>>& polys) {
    PiMatrix m = zero(p, prec, static_cast<int>(polys.size()),
                      polys.empty() ? 0 : static_cast<int>(polys[0].size()));
    for (size_t i = 0; i < polys.size(); ++i) {
      if (static_cast<int>(polys[i].size()) != m.cols)
        fail(errc::invalid_parameter, "ragged matrix");
      for (size_t j = 0; j < polys[i].size(); ++j)
        for (size_t k = 0; k < polys[i][j].size() && k < static_cast<size_t>(prec); ++k)
          m.a[i][j][k] = polys[i][j][k] % p;
    }
    return m;
  }

  PiSeries at(int i, int j) const {
    PiSeries s;
    s.p = p;
    s.c = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return s;
  }
};

namespace detail {

using Coeffs = std::vector<uint32_t>;

inline int vec_ord(const Coeffs& v, uint32_t p) {
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] % p != 0) return static_cast<int>(k);
  return static_cast<int>(v.size());
}

inline void vec_submul(Coeffs& dst, const Coeffs& c, const Coeffs& src, uint32_t p) {
  // dst -= c * src, truncated
  const size_t n = dst.size();
  for (size_t i = 0; i < c.size() && i < n; ++i) {
    if (c[i] == 0) continue;
    uint64_t ci = c[i];
    for (size_t j = 0; j + i < n && j < src.size(); ++j) {
      if (src[j] == 0) continue;
      uint64_t prod = ci * src[j] % p;
      dst[i + j] = static_cast<uint32_t>((dst[i + j] + p - prod) % p);
    }
  }
}

inline Coeffs vec_mul(const Coeffs& a, const Coeffs& b, uint32_t p) {
  Coeffs r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < r.size() && j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  return r;
}

// drop d low coefficients, pad the top with zeros (the padded positions are
// uncertified; the caller's spend accounting covers them)
inline Coeffs vec_shift_down(const Coeffs& v, int d) {
  Coeffs r(v.size(), 0);
  for (size_t k = static_cast<size_t>(d); k < v.size(); ++k) r[k - static_cast<size_t>(d)] = v[k];
  return r;
}

// inverse of a unit, coefficient recursion u*v = 1
inline Coeffs vec_unit_inverse(const Coeffs& u, uint32_t p) {
  Coeffs v(u.size(), 0);
  uint32_t inv0 = fp::inv_mod(u[0] % p, p);
  v[0] = inv0;
  for (size_t k = 1; k < u.size(); ++k) {
    uint64_t acc = 0;
    for (size_t i = 1; i <= k; ++i) acc = (acc + static_cast<uint64_t>(u[i] % p) * v[k - i]) % p;
    v[k] = static_cast<uint32_t>((p - acc) % p * inv0 % p);
  }
  return v;
}

}  // namespace detail

class LatticeClass {
 public:
  LatticeClass() = default;
  LatticeClass(int n, uint32_t p, std::vector<int> diag,
               std::vector<std::vector<std::vector<uint32_t>>> upper)
      : n_(n), p_(p), diag_(std::move(diag)), upper_(std::move(upper)) {}

  int n() const { return n_; }
  uint32_t p() const { return p_; }
  const std::vector<int>& diag() const { return diag_; }

  // reduced entry above the diagonal; exactly diag()[j] coefficients
  const std::vector<uint32_t>& entry(int i, int j) const {
    return upper_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  int type() const {
    int s = 0;
    for (int d : diag_) s += d;
    return ((s % n_) + n_) % n_;
  }

  std::vector<uint32_t> key() const {
    std::vector<uint32_t> k;
    k.push_back(static_cast<uint32_t>(n_));
    k.push_back(p_);
    for (int d : diag_) k.push_back(static_cast<uint32_t>(d));
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (uint32_t x : entry(i, j)) k.push_back(x);
    return k;
  }

  // comma-joined diagonal exponents plus a hash of the off-diagonal part
  std::string label() const {
    std::string s;
    for (size_t i = 0; i < diag_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(diag_[i]);
    }
    uint32_t h = 2166136261u;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        for (uint32_t x : entry(i, j)) {
          h ^= x + 1u;
          h *= 16777619u;
        }
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%08x", h);
    return s + buf;
  }

  // canonical basis embedded at the requested precision (rows are basis
  // vectors; entries are exact polynomials of degree < diag of their column)
  PiMatrix basis(int prec) const {
    int need = 1;
    for (int d : diag_) need = std::max(need, d + 1);
    if (prec < need) fail(errc::precision_exceeded, "precision too small to hold the basis");
    PiMatrix m = PiMatrix::zero(p_, prec, n_, n_);
    for (int i = 0; i < n_; ++i) {
      m.a[static_cast<size_t>(i)][static_cast<size_t>(i)][static_cast<size_t>(diag_[static_cast<size_t>(i)])] = 1;
      for (int j = i + 1; j < n_; ++j) {
        const auto& e = entry(i, j);
        for (size_t k = 0; k < e.size(); ++k) m.a[static_cast<size_t>(i)][static_cast<size_t>(j)][k] = e[k];
      }
    }
    return m;
  }

  bool operator==(const LatticeClass& o) const {
    return n_ == o.n_ && p_ == o.p_ && diag_ == o.diag_ && upper_ == o.upper_;
  }
  bool operator<(const LatticeClass& o) const { return key() < o.key(); }

 private:
  int n_ = 0;
  uint32_t p_ = 2;
  std::vector<int> diag_;
  std::vector<std::vector<std::vector<uint32_t>>> upper_;
};

namespace detail {

// Row Hermite reduction modulo pi^prec with homothety normalization.
// Returns the canonical class; throws SingularBasis / PrecisionExceeded.
inline LatticeClass hnf_canonicalize(PiMatrix m) {
  const uint32_t p = m.p;
  const int n = m.cols;
  const int prec = m.prec;
  if (m.rows < n || n < 1) fail(errc::singular_basis, "basis has too few rows");

  int spent = 0;

  // homothety normalization: divide out the minimum valuation so that the
  // first elementary divisor is a unit
  {
    int m0 = prec;
    for (const auto& row : m.a)
      for (const auto& e : row) m0 = std::min(m0, vec_ord(e, p));
    if (m0 == prec) fail(errc::singular_basis, "zero basis matrix");
    if (m0 > 0) {
      for (auto& row : m.a)
        for (auto& e : row) e = vec_shift_down(e, m0);
      spent += m0;
    }
  }

  std::vector<int> diag(static_cast<size_t>(n), 0);

  for (int col = 0; col < n; ++col) {
    int best = -1, bord = prec;
    for (int r = col; r < m.rows; ++r) {
      int o = vec_ord(m.a[static_cast<size_t>(r)][static_cast<size_t>(col)], p);
      if (o < bord) {
        bord = o;
        best = r;
      }
    }
    if (bord >= prec - spent) {
      if (bord >= prec && spent == 0)
        fail(errc::singular_basis, "basis is rank-deficient at column " + std::to_string(col));
      fail(errc::precision_exceeded, "cannot certify a pivot in column " + std::to_string(col));
    }
    std::swap(m.a[static_cast<size_t>(col)], m.a[static_cast<size_t>(best)]);
    diag[static_cast<size_t>(col)] = bord;

    // scale the pivot row by the inverse of its unit part: pivot becomes
    // exactly pi^bord
    {
      Coeffs u = vec_shift_down(m.a[static_cast<size_t>(col)][static_cast<size_t>(col)], bord);
      Coeffs ui = vec_unit_inverse(u, p);
      for (int j = 0; j < n; ++j)
        m.a[static_cast<size_t>(col)][static_cast<size_t>(j)] =
            vec_mul(m.a[static_cast<size_t>(col)][static_cast<size_t>(j)], ui, p);
      Coeffs clean(static_cast<size_t>(prec), 0);
      clean[static_cast<size_t>(bord)] = 1;
      m.a[static_cast<size_t>(col)][static_cast<size_t>(col)] = clean;
    }

    bool spent_here = false;
    for (int r = col + 1; r < m.rows; ++r) {
      auto& e = m.a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (vec_ord(e, p) >= prec) continue;
      Coeffs c = vec_shift_down(e, bord);
      if (vec_ord(c, p) < prec) {
        spent_here = true;
        for (int j = col + 1; j < n; ++j)
          vec_submul(m.a[static_cast<size_t>(r)][static_cast<size_t>(j)], c,
                     m.a[static_cast<size_t>(col)][static_cast<size_t>(j)], p);
      }
      e.assign(static_cast<size_t>(prec), 0);
    }
    if (spent_here) spent += bord;
  }

  // reduce entries above each pivot modulo the pivot of their column
  for (int col = 1; col < n; ++col) {
    const int d = diag[static_cast<size_t>(col)];
    bool spent_here = false;
    for (int row = 0; row < col; ++row) {
      auto& e = m.a[static_cast<size_t>(row)][static_cast<size_t>(col)];
      Coeffs c = vec_shift_down(e, d);
      if (vec_ord(c, p) < prec) {
        spent_here = true;
        for (int j = col; j < n; ++j)
          vec_submul(m.a[static_cast<size_t>(row)][static_cast<size_t>(j)], c,
                     m.a[static_cast<size_t>(col)][static_cast<size_t>(j)], p);
      }
    }
    if (spent_here) spent += d;
  }

  int maxd = 0;
  for (int d : diag) maxd = std::max(maxd, d);
  if (maxd + 1 > prec - spent)
    fail(errc::precision_exceeded, "canonical entries are not certified at this precision");

  std::vector<std::vector<std::vector<uint32_t>>> upper(
      static_cast<size_t>(n), std::vector<std::vector<uint32_t>>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& e = m.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      upper[static_cast<size_t>(i)][static_cast<size_t>(j)].assign(
          e.begin(), e.begin() + diag[static_cast<size_t>(j)]);
      for (auto& x : upper[static_cast<size_t>(i)][static_cast<size_t>(j)]) x %= p;
    }
  return LatticeClass(n, p, std::move(diag), std::move(upper));
}

// valuation of det of a square matrix over O (forward elimination only)
inline int ord_det(PiMatrix m) {
  const uint32_t p = m.p;
  const int n = m.cols;
  if (m.rows != n) fail(errc::invalid_parameter, "ord_det needs a square matrix");
  int total = 0, spent = 0;
  for (int col = 0; col < n; ++col) {
    int best = -1, bord = m.prec;
    for (int r = col; r < n; ++r) {
      int o = vec_ord(m.a[static_cast<size_t>(r)][static_cast<size_t>(col)], p);
      if (o < bord) {
        bord = o;
        best = r;
      }
    }
    if (bord >= m.prec - spent) fail(errc::singular_basis, "matrix is singular within precision");
    std::swap(m.a[static_cast<size_t>(col)], m.a[static_cast<size_t>(best)]);
    total += bord;
    Coeffs u = vec_shift_down(m.a[static_cast<size_t>(col)][static_cast<size_t>(col)], bord);
    Coeffs ui = vec_unit_inverse(u, p);
    for (int j = 0; j < n; ++j)
      m.a[static_cast<size_t>(col)][static_cast<size_t>(j)] =
          vec_mul(m.a[static_cast<size_t>(col)][static_cast<size_t>(j)], ui, p);
    bool spent_here = false;
    for (int r = col + 1; r < n; ++r) {
      auto& e = m.a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (vec_ord(e, p) >= m.prec) continue;
      Coeffs c = vec_shift_down(e, bord);
      if (vec_ord(c, p) < m.prec) {
        spent_here = true;
        for (int j = col; j < n; ++j)
          vec_submul(m.a[static_cast<size_t>(r)][static_cast<size_t>(j)], c,
                     m.a[static_cast<size_t>(col)][static_cast<size_t>(j)], p);
      }
      e.assign(static_cast<size_t>(m.prec), 0);
    }
    if (spent_here) spent += bord;
  }
  return total;
}

}  // namespace detail

inline void check_field(int n, uint32_t p) {
  if (n < 2) fail(errc::invalid_parameter, "building needs n >= 2");
  if (!is_prime(p)) fail(errc::unsupported_field, "residue field must have prime order");
  if (big_pow(BigInt(p), static_cast<unsigned>(n)) > kMaxFieldPoints)
    fail(errc::too_large, "p^n exceeds the enumeration guard");
}

inline LatticeClass canonical_form(const PiMatrix& basis) {
  if (basis.cols < 2) fail(errc::invalid_parameter, "lattices need rank >= 2");
  if (!is_prime(basis.p)) fail(errc::unsupported_field, "residue field must have prime order");
  return detail::hnf_canonicalize(basis);
}

inline LatticeClass standard_vertex(int n, uint32_t p) {
  check_field(n, p);
  std::vector<std::vector<std::vector<uint32_t>>> upper(
      static_cast<size_t>(n), std::vector<std::vector<uint32_t>>(static_cast<size_t>(n)));
  return LatticeClass(n, p, std::vector<int>(static_cast<size_t>(n), 0), std::move(upper));
}

inline int vertex_type(const LatticeClass& v) { return v.type(); }

namespace detail {

inline int diag_sum(const LatticeClass& v) {
  int s = 0;
  for (int d : v.diag()) s += d;
  return s;
}

// lattice spanned by pi*L together with the lift of a subspace of L/pi*L
// (subspace rows in the coordinates of the canonical basis of L)
inline LatticeClass lift_subspace(const LatticeClass& v, const fp::Basis& rows) {
  const int n = v.n();
  const uint32_t p = v.p();
  const int prec = 4 * (diag_sum(v) + n) + 4;
  PiMatrix b = v.basis(prec);
  PiMatrix stack = PiMatrix::zero(p, prec, n + static_cast<int>(rows.size()), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // pi * basis row
      const auto& src = b.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      auto& dst = stack.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (size_t k = 0; k + 1 < static_cast<size_t>(prec); ++k) dst[k + 1] = src[k];
    }
  for (size_t r = 0; r < rows.size(); ++r)
    for (int j = 0; j < n; ++j) {
      auto& dst = stack.a[static_cast<size_t>(n) + r][static_cast<size_t>(j)];
      for (int k = 0; k < n; ++k) {
        uint32_t c = rows[r][static_cast<size_t>(k)] % p;
        if (c == 0) continue;
        const auto& src = b.a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        for (size_t t = 0; t < static_cast<size_t>(prec); ++t)
          dst[t] = static_cast<uint32_t>((dst[t] + static_cast<uint64_t>(c) * src[t]) % p);
      }
    }
  return hnf_canonicalize(std::move(stack));
}

}  // namespace detail

// One neighbor per proper nonzero subspace of L/pi*L, deduplicated by
// canonical form (enumeration order, first occurrence kept).
inline std::vector<LatticeClass> neighbors(const LatticeClass& v) {
  check_field(v.n(), v.p());
  std::vector<LatticeClass> out;
  std::set<std::vector<uint32_t>> seen;
  for (const auto& s : fp::proper_nonzero_subspaces(v.n(), v.p())) {
    LatticeClass w = detail::lift_subspace(v, s);
    if (seen.insert(w.key()).second) out.push_back(std::move(w));
  }
  return out;
}

// All i-simplices containing v: each is the lift of a chain of proper nonzero
// subspaces S_1 > ... > S_i of L/pi*L. Members are sorted by canonical key,
// and the list is sorted too, so the output is deterministic.
inline std::vector<std::vector<LatticeClass>> simplices_at(const LatticeClass& v, int i) {
  check_field(v.n(), v.p());
  if (i < 1 || i > v.n() - 1)
    fail(errc::invalid_parameter, "simplex dimension must be between 1 and n-1");
  std::map<std::vector<uint32_t>, LatticeClass> lift_memo;
  auto lift = [&](const fp::Basis& s) -> const LatticeClass& {
    auto k = fp::key(s);
    auto it = lift_memo.find(k);
    if (it == lift_memo.end()) it = lift_memo.emplace(k, detail::lift_subspace(v, s)).first;
    return it->second;
  };
  std::set<std::vector<std::vector<uint32_t>>> seen;
  std::vector<std::vector<LatticeClass>> out;
  for (const auto& chain : enumerate_flags(v.n(), v.p(), i)) {
    std::vector<LatticeClass> simplex{v};
    for (const auto& s : chain) simplex.push_back(lift(s));
    std::sort(simplex.begin(), simplex.end());
    std::vector<std::vector<uint32_t>> k;
    for (const auto& c : simplex) k.push_back(c.key());
    if (seen.insert(k).second) out.push_back(std::move(simplex));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<LatticeClass>& a, const std::vector<LatticeClass>& b) {
              for (size_t t = 0; t < a.size() && t < b.size(); ++t) {
                if (a[t] == b[t]) continue;
                return a[t] < b[t];
              }
              return a.size() < b.size();
            });
  return out;
}

struct Ball {
  LatticeClass center;
  int radius = 0;
  std::vector<LatticeClass> classes;  // by vertex id
  std::vector<int> distance;          // by vertex id
  simplicial::Complex complex;
};

// Closed ball of the given radius around a vertex, as a generalized
// simplicial complex: vertex ids are breadth-first discovery order (ties
// within a layer broken by canonical key), and a simplex is included when all
// of its vertices lie in the ball.
inline Ball ball(const LatticeClass& center, int radius) {
  check_field(center.n(), center.p());
  if (radius < 0) fail(errc::invalid_parameter, "radius must be >= 0");
  const int n = center.n();
  const uint32_t p = center.p();

  // guard: tree bound on vertex growth (exact for n = 2, an upper bound
  // otherwise)
  {
    BigInt deg1(0);
    for (int k = 1; k <= n - 1; ++k) {
      BigInt c(0);
      for (const auto& s : fp::all_rref(n, k, p)) {
        (void)s;
        ++c;
      }
      deg1 += c;
    }
    BigInt est(1), layer(1);
    for (int r = 1; r <= radius; ++r) {
      layer = layer * (r == 1 ? deg1 : deg1 - 1);
      est += layer;
      if (est > kMaxBallVertices) fail(errc::too_large, "estimated vertex count exceeds the guard");
    }
  }

  Ball b;
  b.center = center;
  b.radius = radius;

  std::map<std::vector<uint32_t>, int> id_of;
  b.classes.push_back(center);
  b.distance.push_back(0);
  id_of[center.key()] = 0;
  size_t layer_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    size_t layer_end = b.classes.size();
    std::set<std::vector<uint32_t>> fresh;
    std::map<std::vector<uint32_t>, LatticeClass> fresh_class;
    for (size_t i = layer_begin; i < layer_end; ++i) {
      for (auto& w : neighbors(b.classes[i])) {
        auto k = w.key();
        if (id_of.count(k) || fresh.count(k)) continue;
        fresh.insert(k);
        fresh_class.emplace(std::move(k), std::move(w));
      }
    }
    for (auto& [k, cls] : fresh_class) {
      id_of[k] = static_cast<int>(b.classes.size());
      b.classes.push_back(cls);
      b.distance.push_back(r);
      if (b.classes.size() > kMaxBallVertices)
        fail(errc::too_large, "ball vertex count exceeds the guard");
    }
    layer_begin = layer_end;
  }

  // simplices: prune flag chains to ball membership as they grow
  std::vector<std::set<std::vector<int>>> simplex_sets(static_cast<size_t>(n - 1));
  size_t total_simplices = 0;
  auto all_subspaces = fp::proper_nonzero_subspaces(n, p);
  for (size_t vi = 0; vi < b.classes.size(); ++vi) {
    const LatticeClass& v = b.classes[vi];
    // lift ids for every subspace, or nothing if outside the ball
    std::map<std::vector<uint32_t>, std::optional<int>> lift_id;
    auto lifted = [&](const fp::Basis& s) -> std::optional<int> {
      auto k = fp::key(s);
      auto it = lift_id.find(k);
      if (it == lift_id.end()) {
        LatticeClass w = detail::lift_subspace(v, s);
        auto idit = id_of.find(w.key());
        std::optional<int> val;
        if (idit != id_of.end()) val = idit->second;
        it = lift_id.emplace(std::move(k), val).first;
      }
      return it->second;
    };
    std::vector<int> chain_ids{static_cast<int>(vi)};
    auto rec = [&](auto&& self, const fp::Basis& top) -> void {
      if (chain_ids.size() >= 2) {
        std::vector<int> tuple = chain_ids;
        std::sort(tuple.begin(), tuple.end());
        auto& dst = simplex_sets[chain_ids.size() - 2];
        if (dst.insert(std::move(tuple)).second &&
            ++total_simplices > kMaxBallSimplices)
          fail(errc::too_large, "ball simplex count exceeds the guard");
      }
      if (chain_ids.size() == static_cast<size_t>(n)) return;
      for (const auto& s : fp::proper_nonzero_subspaces_of(top, p)) {
        auto id = lifted(s);
        if (!id) continue;
        chain_ids.push_back(*id);
        self(self, s);
        chain_ids.pop_back();
      }
    };
    for (const auto& s : all_subspaces) {
      auto id = lifted(s);
      if (!id) continue;
      chain_ids.push_back(*id);
      rec(rec, s);
      chain_ids.pop_back();
    }
  }

  std::vector<simplicial::VertexRec> verts;
  for (size_t i = 0; i < b.classes.size(); ++i)
    verts.push_back({static_cast<int>(i), b.classes[i].label()});
  std::vector<simplicial::SimplexRec> simps;
  for (size_t d = 0; d < simplex_sets.size(); ++d) {
    int next = 0;
    for (const auto& tuple : simplex_sets[d]) simps.push_back({next++, tuple});
  }
  b.complex = simplicial::Complex::build(std::move(verts), std::move(simps));
  return b;
}

// Image of a vertex under g in GL_n(K), given as a matrix of polynomials in
// pi (an overall power of pi cancels in the homothety class, so Laurent
// matrices reduce to this case). The type shifts by ord(det g) mod n.
inline LatticeClass apply_gl(const PiMatrix& g, const LatticeClass& v) {
  check_field(v.n(), v.p());
  const int n = v.n();
  if (g.rows != n || g.cols != n) fail(errc::invalid_parameter, "group element must be n x n");
  if (g.p != v.p()) fail(errc::invalid_parameter, "mismatched residue fields");
  int gprec = std::max(g.prec + n + 2, 2 * n + 4);
  PiMatrix gg = PiMatrix::zero(g.p, gprec, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < g.prec && k < gprec; ++k)
        gg.a[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] =
            g.a[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  int sg = detail::ord_det(gg);
  const int prec = 4 * (detail::diag_sum(v) + sg + n) + 4 + g.prec;
  PiMatrix b = v.basis(prec);
  PiMatrix r = PiMatrix::zero(v.p(), prec, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& dst = r.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < n; ++k) {
        // (B g^T)[i][j] = sum_k B[i][k] * g[j][k]
        detail::Coeffs gejk(static_cast<size_t>(prec), 0);
        for (int t = 0; t < g.prec && t < prec; ++t)
          gejk[static_cast<size_t>(t)] = g.a[static_cast<size_t>(j)][static_cast<size_t>(k)][static_cast<size_t>(t)];
        detail::Coeffs prod = detail::vec_mul(b.a[static_cast<size_t>(i)][static_cast<size_t>(k)], gejk, v.p());
        for (size_t t = 0; t < dst.size(); ++t) dst[t] = (dst[t] + prod[t]) % v.p();
      }
    }
  return detail::hnf_canonicalize(std::move(r));
}

}  // namespace btq::building
