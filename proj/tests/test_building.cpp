#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "btq/building.hpp"
#include "btq/qcombinatorics.hpp"

using btq::BigInt;
using btq::Error;
using btq::errc;
using namespace btq::building;

namespace {

// deterministic congruential stream for random unimodular matrices
struct Lcg {
  uint64_t s;
  explicit Lcg(uint64_t seed) : s(seed) {}
  uint32_t next(uint32_t bound) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<uint32_t>((s >> 33) % bound);
  }
};

// product of an upper and a lower unitriangular matrix over O/pi^prec, with a
// row swap thrown in: always unimodular
PiMatrix random_unimodular(int n, uint32_t p, int prec, Lcg& rng) {
  PiMatrix upper = PiMatrix::identity(p, prec, n);
  PiMatrix lower = PiMatrix::identity(p, prec, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < prec; ++k) {
        upper.a[size_t(i)][size_t(j)][size_t(k)] = rng.next(p);
        lower.a[size_t(j)][size_t(i)][size_t(k)] = rng.next(p);
      }
  // multiply: out = upper * lower, then swap two rows
  PiMatrix out = PiMatrix::zero(p, prec, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<uint32_t> acc(size_t(prec), 0);
      for (int k = 0; k < n; ++k) {
        const auto& x = upper.a[size_t(i)][size_t(k)];
        const auto& y = lower.a[size_t(k)][size_t(j)];
        for (int a = 0; a < prec; ++a)
          for (int b = 0; a + b < prec; ++b)
            acc[size_t(a + b)] = (acc[size_t(a + b)] + x[size_t(a)] * y[size_t(b)]) % p;
      }
      out.a[size_t(i)][size_t(j)] = std::move(acc);
    }
  if (n > 1) {
    int r1 = int(rng.next(uint32_t(n))), r2 = int(rng.next(uint32_t(n)));
    std::swap(out.a[size_t(r1)], out.a[size_t(r2)]);
  }
  return out;
}

// U * B over O/pi^prec
PiMatrix mat_mul(const PiMatrix& u, const PiMatrix& b) {
  PiMatrix out = PiMatrix::zero(u.p, std::min(u.prec, b.prec), u.rows, b.cols);
  for (int i = 0; i < out.rows; ++i)
    for (int j = 0; j < out.cols; ++j) {
      std::vector<uint32_t> acc(size_t(out.prec), 0);
      for (int k = 0; k < u.cols; ++k) {
        const auto& x = u.a[size_t(i)][size_t(k)];
        const auto& y = b.a[size_t(k)][size_t(j)];
        for (int a = 0; a < out.prec; ++a) {
          if (x[size_t(a)] == 0) continue;
          for (int bb = 0; a + bb < out.prec; ++bb)
            acc[size_t(a + bb)] = (acc[size_t(a + bb)] + x[size_t(a)] * y[size_t(bb)]) % u.p;
        }
      }
      out.a[size_t(i)][size_t(j)] = std::move(acc);
    }
  return out;
}

}  // namespace

TEST_CASE("standard vertex and field guard") {
  auto v = standard_vertex(3, 2);
  CHECK(v.n() == 3);
  CHECK(v.diag() == std::vector<int>{0, 0, 0});
  CHECK(v.type() == 0);
  CHECK(v.label() == "0,0,0#811c9dc5");

  CHECK_THROWS_AS(standard_vertex(2, 4), Error);   // p must be prime
  CHECK_THROWS_AS(standard_vertex(1, 2), Error);
  try {
    standard_vertex(2, 9);                         // 9 = 3^2 is not prime
    FAIL("expected UnsupportedField");
  } catch (const Error& e) {
    CHECK(e.code() == errc::unsupported_field);
  }
  try {
    standard_vertex(13, 3);                        // 3^13 overflows the point guard
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("canonical form is basis independent") {
  // pi-scaled standard basis is the same homothety class
  auto v = standard_vertex(2, 3);
  PiMatrix scaled = PiMatrix::zero(3, 4, 2, 2);
  scaled.a[0][0][1] = 1;
  scaled.a[1][1][1] = 1;
  CHECK(canonical_form(scaled) == v);

  // row operations and permutations do not change the class
  Lcg rng(42);
  for (auto [n, p] : {std::pair<int, uint32_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    auto base = standard_vertex(n, p);
    for (const auto& w : neighbors(base)) {
      PiMatrix b = w.basis(8);
      for (int t = 0; t < 10; ++t) {
        PiMatrix u = random_unimodular(n, p, 8, rng);
        CHECK(canonical_form(mat_mul(u, b)) == w);
      }
    }
  }
}

TEST_CASE("singular and underprecise bases are rejected") {
  PiMatrix z = PiMatrix::zero(2, 6, 2, 2);
  try {
    canonical_form(z);
    FAIL("expected SingularBasis");
  } catch (const Error& e) {
    CHECK(e.code() == errc::singular_basis);
  }

  // rank 1 modulo precision: second row is pi^6 * e1, invisible at prec 6
  PiMatrix r1 = PiMatrix::zero(2, 6, 2, 2);
  r1.a[0][0][0] = 1;
  CHECK_THROWS_AS(canonical_form(r1), Error);
}

TEST_CASE("neighbors of the standard vertex") {
  auto v = standard_vertex(2, 2);
  auto ns = neighbors(v);
  REQUIRE(ns.size() == 3);  // q+1 = 3 on the tree
  std::set<std::string> labels;
  for (const auto& w : ns) {
    CHECK(w.type() == 1);
    labels.insert(w.label());
  }
  CHECK(labels.size() == 3);

  auto v3 = standard_vertex(3, 2);
  CHECK(neighbors(v3).size() == 14);
}

TEST_CASE("simplices at a vertex match the degree polynomial") {
  auto v = standard_vertex(3, 2);
  CHECK(simplices_at(v, 1).size() == 14);
  CHECK(simplices_at(v, 2).size() == 21);
  for (const auto& chain : simplices_at(v, 2)) {
    REQUIRE(chain.size() == 3);
    // vertex types in a chamber are pairwise distinct
    std::set<int> types{chain[0].type(), chain[1].type(), chain[2].type()};
    CHECK(types.size() == 3);
  }

  auto v25 = standard_vertex(2, 5);
  CHECK(simplices_at(v25, 1).size() == 6);
}

TEST_CASE("precision stability of canonicalization") {
  // the same basis read at two working precisions canonicalizes identically
  auto v = standard_vertex(3, 2);
  auto chains = simplices_at(v, 1);
  for (const auto& w : chains[5]) {
    PiMatrix b8 = w.basis(8);
    PiMatrix b12 = w.basis(12);
    CHECK(canonical_form(b8) == canonical_form(b12));
  }
}

TEST_CASE("balls are contractible pieces of the building") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (int r = 1; r <= 3; ++r) {
      auto b = ball(standard_vertex(2, p), r);
      INFO("p = " << p << ", radius = " << r);
      // tree ball: V - E = 1, sizes 1 + (q+1) * ((q^r - 1)/(q - 1)) vertices
      CHECK(b.complex.euler_characteristic() == 1);
      size_t expect = 1;
      size_t layer = p + 1;
      for (int k = 1; k <= r; ++k, layer *= p) expect += layer;
      CHECK(b.complex.vertex_count() == expect);
    }
  }

  auto b32 = ball(standard_vertex(3, 2), 1);
  CHECK(b32.complex.vertex_count() == 15);
  CHECK(b32.complex.simplex_count(1) == 35);
  CHECK(b32.complex.simplex_count(2) == 21);
  CHECK(b32.complex.euler_characteristic() == 1);
  REQUIRE(b32.distance.size() == b32.classes.size());
  CHECK(b32.distance[0] == 0);
  CHECK(b32.distance.back() == 1);
}

TEST_CASE("ball guard rejects oversized requests") {
  try {
    ball(standard_vertex(2, 5), 9);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("matrix action moves classes and shifts type") {
  // g = diag(pi, 1): type increases by 1 mod n
  PiMatrix g = PiMatrix::zero(2, 6, 2, 2);
  g.a[0][0][1] = 1;
  g.a[1][1][0] = 1;
  auto v = standard_vertex(2, 2);
  auto w = apply_gl(g, v);
  CHECK(w.type() == 1);
  auto further = apply_gl(g, w);
  CHECK(further.type() == 0);
  CHECK_FALSE(further == v);  // diag(pi^2, 1) moves the class two steps out

  // a scalar matrix rescales the lattice and fixes every class
  PiMatrix scalar = PiMatrix::zero(2, 6, 2, 2);
  scalar.a[0][0][1] = 1;
  scalar.a[1][1][1] = 1;
  CHECK(apply_gl(scalar, v) == v);
  CHECK(apply_gl(scalar, w) == w);

  // unimodular g fixes the standard class
  PiMatrix u = PiMatrix::identity(2, 6, 2);
  u.a[0][1][0] = 1;
  CHECK(apply_gl(u, v) == v);
}

TEST_CASE("dump of a small ball is stable") {
  auto b = ball(standard_vertex(2, 2), 1);
  CHECK(b.complex.dump_string() ==
        "simplicial v1\n"
        "v 0 0,0#811c9dc5\n"
        "v 1 0,1#040c5b8c\n"
        "v 2 0,1#070c6045\n"
        "v 3 1,0#811c9dc5\n"
        "s 1 0 0 1\n"
        "s 1 1 0 2\n"
        "s 1 2 0 3\n");
  std::istringstream is(b.complex.dump_string());
  CHECK(btq::simplicial::Complex::parse_dump(is) == b.complex);
}
