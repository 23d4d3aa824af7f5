#include <catch2/catch_amalgamated.hpp>

#include "btq/invariants.hpp"
#include "btq/ramification.hpp"

using btq::BigInt;
using btq::BigRat;
using btq::Error;
using btq::errc;
using btq::QPoly;
using namespace btq::arith;

namespace {

template <class F>
errc code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error to be thrown");
  return errc::internal_check_failed;
}

}  // namespace

TEST_CASE("ramification data validation") {
  CHECK(validate_data(make_data(4, 3, {1, 1})).ok());
  CHECK(validate_data(make_data(2, 3, {1, 2})).ok());

  auto odd = validate_data(make_data(2, 2, {1, 1, 2}));
  REQUIRE_FALSE(odd.ok());
  CHECK(odd.errors.front().code == errc::odd_ramification_for_n2);

  auto few = validate_data(make_data(2, 3, {1}));
  REQUIRE_FALSE(few.ok());
  CHECK(few.errors.front().code == errc::too_few_places);

  auto bad_n = validate_data(make_data(2, 1, {1, 1}));
  REQUIRE_FALSE(bad_n.ok());
  CHECK(bad_n.errors.front().code == errc::invalid_parameter);

  auto bad_deg = validate_data(make_data(2, 3, {0, 1}));
  CHECK_FALSE(bad_deg.ok());

  auto bad_q = validate_data(make_data(1, 3, {1, 1}));
  CHECK_FALSE(bad_q.ok());
}

TEST_CASE("invariant lists are checked when present") {
  CHECK(validate_data(make_data(2, 3, {1, 2}, {{1, 2}})).ok());

  auto wrong_count = validate_data(make_data(2, 3, {1, 2}, {{1}}));
  REQUIRE_FALSE(wrong_count.ok());
  CHECK(wrong_count.errors.front().code == errc::bad_invariants);

  auto not_coprime = validate_data(make_data(2, 3, {1, 2}, {{0, 0}}));
  REQUIRE_FALSE(not_coprime.ok());
  CHECK(not_coprime.errors.front().code == errc::bad_invariants);

  auto bad_sum = validate_data(make_data(2, 3, {1, 2}, {{1, 1}}));
  REQUIRE_FALSE(bad_sum.ok());
  CHECK(bad_sum.errors.front().code == errc::bad_invariants);

  // negative representatives are reduced mod n
  CHECK(validate_data(make_data(2, 3, {1, 2}, {{-2, 2}})).ok());
}

TEST_CASE("non prime power q only warns") {
  auto r = validate_data(make_data(6, 3, {1, 1}));
  CHECK(r.ok());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("not a prime power") != std::string::npos);

  CHECK(validate_data(make_data(8, 3, {1, 1})).warnings.empty());
}

TEST_CASE("counting monic irreducibles over small fields") {
  CHECK(monic_irreducible_count(2, 1) == 2);
  CHECK(monic_irreducible_count(2, 2) == 1);
  CHECK(monic_irreducible_count(2, 3) == 2);
  CHECK(monic_irreducible_count(2, 4) == 3);
  CHECK(monic_irreducible_count(3, 1) == 3);
  CHECK(monic_irreducible_count(3, 2) == 3);
  CHECK(monic_irreducible_count(4, 1) == 4);
  CHECK(monic_irreducible_count(5, 4) == 150);

  // degree-d monics decompose into irreducible factors: q^d = sum over
  // factorization shapes; spot check via sum_{d | 4} d * N(d) counting points
  // of F_{q^4} by minimal polynomial degree
  for (long long q : {2, 3, 4, 5}) {
    BigInt pts = 0;
    for (int d : {1, 2, 4}) pts += BigInt(d) * monic_irreducible_count(q, d);
    CHECK(pts == btq::big_pow(BigInt(q), 4));
  }
}

TEST_CASE("degree multisets larger than the field allows are rejected") {
  auto r = validate_data(make_data(2, 2, {1, 1, 1, 1}));
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().code == errc::invalid_parameter);
  CHECK(r.errors.front().message.find("only 2 finite place(s) of degree 1") != std::string::npos);

  // same multiset is fine once the field has enough degree-1 places
  CHECK(validate_data(make_data(4, 2, {1, 1, 1, 1})).ok());

  // three degree-1 places need q >= 3
  CHECK_FALSE(validate_data(make_data(2, 3, {1, 1, 1})).ok());
  CHECK(validate_data(make_data(3, 3, {1, 1, 1})).ok());

  // F_2 has a single irreducible quadratic
  CHECK_FALSE(validate_data(make_data(2, 3, {2, 2})).ok());
  CHECK(validate_data(make_data(3, 3, {2, 2})).ok());

  // the check is skipped for formal q
  CHECK(validate_data(make_data(6, 3, {1, 1, 1, 1, 1, 1, 1})).ok());
}

TEST_CASE("wp and subfield embeddings") {
  CHECK(wp(3, 3) == 0);
  CHECK(wp(1, 5) == 1);
  CHECK(wp(2, 4) == 0);
  CHECK(wp(4, 9) == 1);
  CHECK_THROWS_AS(wp(0, 3), Error);

  CHECK(wp_product(std::vector<int>{1, 1}, 3) == 1);
  CHECK(wp_product(std::vector<int>{1, 3}, 3) == 0);
  CHECK(wp_product(std::vector<int>{2, 5, 9}, 7) == 1);

  auto d = make_data(2, 3, {1, 2});
  CHECK(embeds_subfield(d, 1));
  CHECK(embeds_subfield(d, 3));
  CHECK_FALSE(embeds_subfield(d, 2));  // 2 does not divide 3

  auto ram3 = make_data(2, 3, {1, 3});
  CHECK_FALSE(embeds_subfield(ram3, 3));  // the degree-3 place blocks it
}

TEST_CASE("optimal embedding counts") {
  auto r = embedding_numbers(make_data(2, 3, {1, 1}));
  CHECK(r.local_m == std::vector<BigInt>{3, 3});
  CHECK(r.mB == 9);
  CHECK(r.W == 3);
  REQUIRE(r.subfields.size() == 2);
  CHECK(r.subfields[0] == std::pair<int, bool>{1, true});
  CHECK(r.subfields[1] == std::pair<int, bool>{3, true});

  auto blocked = embedding_numbers(make_data(2, 3, {1, 3}));
  CHECK(blocked.local_m == std::vector<BigInt>{3, 0});
  CHECK(blocked.mB == 0);
  CHECK(blocked.W == 0);
  CHECK(blocked.subfields.back() == std::pair<int, bool>{3, false});

  CHECK(embedding_numbers(make_data(2, 5, {1, 1})).W == 5);
  CHECK(code_of([] { embedding_numbers(make_data(2, 4, {1, 1})); }) == errc::non_prime_n);
}

TEST_CASE("covolume of the lattice") {
  CHECK(volume(make_data(3, 2, {1, 1})) == BigRat(1, 2));
  CHECK(volume(make_data(2, 3, {1, 1})) == BigRat(3, 7));
  // covolumes grow with the ramification degrees
  CHECK(volume(make_data(2, 3, {1, 2})) > volume(make_data(2, 3, {1, 1})));
}

TEST_CASE("chi for two rational places") {
  for (long long q : {2, 3, 4, 5, 7, 8, 9}) {
    auto r2 = chi(make_data(q, 2, {1, 1}));
    INFO("q = " << q);
    CHECK(r2.chi == 1);
    CHECK(r2.W == 2);
    CHECK(r2.congruence_ok);
    CHECK(r2.h == std::vector<BigInt>{1, 0});

    auto r3 = chi(make_data(q, 3, {1, 1}));
    CHECK(r3.chi == q + 1);
    CHECK(r3.W == 3);
    CHECK(r3.stab_generic == q - 1);
    CHECK(r3.stab_special == q * q * q - 1);
    CHECK(r3.congruence_ok);
    CHECK(r3.h == std::vector<BigInt>{1, 0, BigInt(q)});
  }
}

TEST_CASE("chi vanishing embeddings case") {
  // W = 0 kills the second term: chi = (q-1)(q^6-1) for degrees {1, 3}
  auto r = chi(make_data(2, 3, {1, 3}), true);
  CHECK(r.chi == 63);
  CHECK(r.W == 0);
  REQUIRE(r.chi_poly.has_value());
  CHECK(r.chi_poly->eval_int(BigInt(3)) == 2 * (729 - 1));
  CHECK(r.chi_poly->constant_term() == 1);
}

TEST_CASE("chi rejects what the theory does not cover") {
  CHECK(code_of([] { chi(make_data(2, 4, {1, 1})); }) == errc::non_prime_n);
  CHECK(code_of([] { chi(make_data(2, 2, {1, 1, 1, 1})); }) == errc::invalid_parameter);
  CHECK(code_of([] { chi(make_data(2, 3, {1})); }) == errc::too_few_places);
}

TEST_CASE("formal q passes through the numeric pipeline") {
  auto r = chi(make_data(6, 3, {1, 1}));
  CHECK(r.chi == 7);
  CHECK(r.congruence_ok);
}

TEST_CASE("raw chi evaluates anything structurally sound") {
  CHECK(chi_raw(make_data(2, 4, {1, 1})) == BigRat(7, 3));
  CHECK(chi_raw(make_data(2, 3, {1, 1})) == BigRat(3));
  CHECK(chi_raw(make_data(5, 2, {1, 1})) == BigRat(1));
  // no ramification set realizes this multiset, and the value betrays it:
  // a connected quotient graph cannot have chi = 5
  CHECK(chi_raw(make_data(2, 2, {1, 1, 1, 1})) == BigRat(5));
  CHECK(code_of([] { chi_raw(make_data(2, 3, {1})); }) == errc::too_few_places);
}

TEST_CASE("symbolic chi divides exactly") {
  QPoly expect = btq::QPoly::var() + btq::QPoly::one();
  CHECK(chi_symbolic(3, {1, 1}) == expect);
  CHECK(chi_symbolic(2, {1, 1}) == btq::QPoly::one());

  QPoly p13 = chi_symbolic(3, {1, 3});
  CHECK(p13.degree() == 7);
  CHECK(p13.constant_term() == 1);
  CHECK(p13.eval_int(BigInt(2)) == 63);

  // structural validation only: no q means no realizability question
  QPoly p111 = chi_symbolic(3, {1, 1, 1});
  CHECK(p111.constant_term() == 1);
  CHECK(code_of([] { chi_symbolic(4, {1, 1}); }) == errc::non_prime_n);
}

TEST_CASE("theta closed form for two rational places") {
  auto t2 = theta(make_data(7, 2, {1, 1}));
  CHECK(t2.theta == std::vector<BigInt>{2, 1});
  CHECK(t2.closed_form_used);

  for (long long q : {2, 3, 4}) {
    auto t3 = theta(make_data(q, 3, {1, 1}));
    INFO("q = " << q);
    CHECK(t3.theta == std::vector<BigInt>{3, 3, q + 1});
    CHECK(t3.closed_form_used);
  }

  auto t5 = theta(make_data(2, 5, {1, 1}));
  CHECK(t5.theta == std::vector<BigInt>{5, 30, 250, 525, 315});
  CHECK(t5.closed_form_used);
}

TEST_CASE("theta for general ramification") {
  auto t = theta(make_data(2, 3, {1, 2}));
  CHECK_FALSE(t.closed_form_used);
  REQUIRE(t.theta.size() == 3);
  BigInt alt = 0;
  int sign = 1;
  for (const auto& v : t.theta) {
    CHECK(v > 0);
    alt += sign * v;
    sign = -sign;
  }
  CHECK(alt == chi(make_data(2, 3, {1, 2})).chi);

  auto t2 = theta(make_data(3, 2, {1, 2, 2, 3}));
  CHECK(t2.theta.size() == 2);
  CHECK(t2.theta[0] - t2.theta[1] == chi(make_data(3, 2, {1, 2, 2, 3})).chi);
}

TEST_CASE("default invariants") {
  auto d = make_data(2, 3, {1, 1});
  CHECK(default_invariants(d) == std::vector<long long>{1, 2});
  auto d3 = make_data(2, 5, {1, 1, 2});
  auto a = default_invariants(d3);
  REQUIRE(a.size() == 3);
  long long sum = 0;
  for (long long x : a) {
    CHECK(std::gcd(x, 5ll) == 1);
    sum += x;
  }
  CHECK(sum % 5 == 0);

  // explicit invariants are passed through untouched
  auto given = make_data(2, 3, {1, 1}, {{2, 1}});
  CHECK(default_invariants(given) == std::vector<long long>{2, 1});
}

TEST_CASE("explicit small quotients") {
  auto seg = multilayer_demo(2, 5);
  CHECK(seg.vertex_count() == 2);
  CHECK(seg.simplex_count(1) == 1);
  CHECK(seg.euler_characteristic() == 1);

  auto shell = multilayer_demo(3, 4);
  CHECK(shell.vertex_count() == 3);
  CHECK(shell.simplex_count(1) == 3);
  CHECK(shell.simplex_count(2) == 5);
  CHECK(shell.euler_characteristic() == 5);

  CHECK(multilayer_demo(3, 2).simplex_count(2) == 3);
  CHECK(code_of([] { multilayer_demo(4, 2); }) == errc::unsupported);
  CHECK(code_of([] { multilayer_demo(3, 1); }) == errc::invalid_parameter);
}

TEST_CASE("prime n gate") {
  CHECK_NOTHROW(require_prime_n(2));
  CHECK_NOTHROW(require_prime_n(7));
  CHECK(code_of([] { require_prime_n(4); }) == errc::non_prime_n);
  CHECK(code_of([] { require_prime_n(1); }) == errc::non_prime_n);
}
