#include <catch2/catch_amalgamated.hpp>

#include "btq/compositions.hpp"
#include "btq/fpspace.hpp"
#include "btq/qcombinatorics.hpp"

using btq::BigInt;
using btq::Error;
using btq::QPoly;
using btq::errc;

TEST_CASE("compositions enumerate ordered partitions") {
  // 2^(n-1) compositions of n, C(n-1, k-1) of length k
  CHECK(btq::compositions(1).size() == 1);
  CHECK(btq::compositions(4).size() == 8);
  CHECK(btq::compositions(6).size() == 32);
  CHECK(btq::compositions(4, 2).size() == 3);
  CHECK(btq::compositions(5, 3).size() == 6);
  for (const auto& p : btq::compositions(5)) {
    CHECK(p.total() == 5);
    CHECK(p.length() >= 1);
  }
  // order matters: (1,2) and (2,1) are distinct
  auto len2 = btq::compositions(3, 2);
  REQUIRE(len2.size() == 2);
  CHECK(len2[0].parts() != len2[1].parts());
}

TEST_CASE("q-bracket values") {
  CHECK(btq::q_bracket(0) == QPoly::one());
  CHECK(btq::q_bracket(1) == QPoly::var() - QPoly::one());
  // [3] at q=2: 7*3*1
  CHECK(btq::q_bracket(3).eval_int(BigInt(2)) == 21);
  CHECK(btq::q_bracket(4).eval_int(BigInt(2)) == 315);
  CHECK(btq::q_bracket(2).eval_int(BigInt(5)) == 96);
  CHECK_THROWS_AS(btq::q_bracket(-1), Error);
}

TEST_CASE("gaussian binomial matches the subspace oracle") {
  CHECK(btq::gauss_binomial(0, 0) == QPoly::one());
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) {
      QPoly g = btq::gauss_binomial(m, k);
      CHECK(g == btq::gauss_binomial(m, m - k));
      for (uint32_t p : {2u, 3u}) {
        CHECK(g.eval_int(BigInt(p)) == btq::subspace_count_oracle(m, k, p));
      }
    }
  // the classic: 2-dimensional subspaces of F_2^4
  CHECK(btq::gauss_binomial(4, 2).eval_int(BigInt(2)) == 35);
  CHECK_THROWS_AS(btq::gauss_binomial(2, 3), Error);
}

TEST_CASE("gaussian multinomial counts flags with prescribed jumps") {
  // [4; 2,2] at q=2 equals the number of 2-subspaces, 35
  auto comps = btq::compositions(4, 2);
  for (const auto& p : comps) {
    if (p.parts() == std::vector<int>{2, 2})
      CHECK(btq::gauss_multinomial(4, p).eval_int(BigInt(2)) == 35);
  }
  // multinomial over a full flag composition = [n]_q / [1]_q^n
  for (const auto& p : btq::compositions(3, 3))
    CHECK(btq::gauss_multinomial(3, p).eval_int(BigInt(2)) == 21);
}

TEST_CASE("vertex degree closed form, frozen values, and the flag oracle") {
  CHECK(btq::vertex_degree(2, 1).eval_int(BigInt(3)) == 4);  // q+1 neighbors on the tree
  CHECK(btq::vertex_degree(3, 1).eval_int(BigInt(2)) == 14);
  CHECK(btq::vertex_degree(3, 2).eval_int(BigInt(2)) == 21);
  CHECK(btq::vertex_degree(4, 1).eval_int(BigInt(2)) == 65);
  CHECK(btq::vertex_degree(4, 2).eval_int(BigInt(2)) == 315);
  CHECK(btq::vertex_degree(4, 3).eval_int(BigInt(2)) == 315);

  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(btq::vertex_degree(n, i).eval_int(BigInt(2)) == btq::flag_count_oracle(n, i, 2));

  CHECK_THROWS_AS(btq::vertex_degree(3, 0), Error);
  CHECK_THROWS_AS(btq::vertex_degree(3, 3), Error);
  CHECK_THROWS_AS(btq::vertex_degree(1, 1), Error);
}

TEST_CASE("flag enumeration agrees with the count oracle") {
  CHECK(btq::enumerate_flags(3, 2, 1).size() == 14);
  CHECK(btq::enumerate_flags(3, 2, 2).size() == 21);
  CHECK(btq::enumerate_flags(2, 5, 1).size() == 6);
  // every enumerated 2-flag is strictly decreasing in dimension
  for (const auto& flag : btq::enumerate_flags(3, 3, 2)) {
    REQUIRE(flag.size() == 2);
    CHECK(flag[0].size() > flag[1].size());
  }
}

TEST_CASE("oracle workload guard trips instead of stalling") {
  try {
    btq::subspace_count_oracle(30, 15, 2);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("alternating multinomial identity at small n") {
  for (int n = 1; n <= 6; ++n) {
    auto rep = btq::andrews_check(n);
    INFO("n = " << n);
    CHECK(rep.equal);
    CHECK(rep.lhs == rep.rhs);
  }
}
