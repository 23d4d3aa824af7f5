#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "btq/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = btq::cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chi table output") {
  auto r = run({"chi", "--n", "3", "--q", "4", "--degrees", "1,1"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "n              3\n"
        "q              4\n"
        "degrees        1,1\n"
        "wp_n           1\n"
        "volume         1/7\n"
        "chi            5\n"
        "W              3\n"
        "mB             9\n"
        "local_m        3,3\n"
        "congruence_ok  true\n"
        "h              1,0,4\n");
}

TEST_CASE("chi json output") {
  auto r = run({"chi", "--n", "3", "--q", "4", "--degrees", "1,1", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == "3");
  CHECK(j["q"] == "4");
  CHECK(j["degrees"] == nlohmann::json::array({"1", "1"}));
  CHECK(j["wp_n"] == "1");
  CHECK(j["volume"]["num"] == "1");
  CHECK(j["volume"]["den"] == "7");
  CHECK(j["chi"] == "5");
  CHECK(j["W"] == "3");
  CHECK(j["mB"] == "9");
  CHECK(j["local_m"] == nlohmann::json::array({"3", "3"}));
  CHECK(j["congruence_ok"] == true);
  CHECK(j["h"] == nlohmann::json::array({"1", "0", "4"}));

  // with --symbolic the polynomial coefficients appear, constant term first
  auto s = run({"chi", "--n", "3", "--q", "4", "--degrees", "1,1", "--json", "--symbolic"});
  REQUIRE(s.code == 0);
  auto js = nlohmann::json::parse(s.out);
  CHECK(js["chi_poly"] == nlohmann::json::array({"1", "1"}));
}

TEST_CASE("cli output is deterministic") {
  auto a = run({"chi", "--n", "5", "--q", "3", "--degrees", "1,2", "--json"});
  auto b = run({"chi", "--n", "5", "--q", "3", "--degrees", "1,2", "--json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("theta defaults to two rational places") {
  auto r = run({"theta", "--n", "3", "--q", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "n                 3\n"
        "q                 2\n"
        "degrees           1,1\n"
        "chi               3\n"
        "theta             3,3,3\n"
        "closed_form_used  true\n");

  auto j = run({"theta", "--n", "5", "--q", "2", "--json"});
  REQUIRE(j.code == 0);
  auto jj = nlohmann::json::parse(j.out);
  CHECK(jj["theta"] == nlohmann::json::array({"5", "30", "250", "525", "315"}));
}

TEST_CASE("embed table output") {
  auto r = run({"embed", "--n", "3", "--q", "2", "--degrees", "1,3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("mB         0\n") != std::string::npos);
  CHECK(r.out.find("W          0\n") != std::string::npos);
  CHECK(r.out.find("subfields  m=1:yes, m=3:no\n") != std::string::npos);
}

TEST_CASE("composite n is rejected unless raw is asked for") {
  auto rejected = run({"chi", "--n", "4", "--q", "2", "--degrees", "1,1"});
  CHECK(rejected.code == 2);
  CHECK(rejected.out.empty());
  CHECK(rejected.err.find("NonPrimeN") != std::string::npos);

  auto raw = run({"chi", "--n", "4", "--q", "2", "--degrees", "1,1", "--raw"});
  REQUIRE(raw.code == 0);
  CHECK(raw.out.find("chi_raw  7/3\n") != std::string::npos);

  auto raw_json = run({"chi", "--n", "4", "--q", "2", "--degrees", "1,1", "--raw", "--json"});
  REQUIRE(raw_json.code == 0);
  auto j = nlohmann::json::parse(raw_json.out);
  CHECK(j["chi_raw"]["num"] == "7");
  CHECK(j["chi_raw"]["den"] == "3");
}

TEST_CASE("impossible ramification sets exit with a clear message") {
  auto r = run({"chi", "--n", "2", "--q", "2", "--degrees", "1,1,1,1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no such ramification set") != std::string::npos);

  // the same degrees over a larger field are fine
  auto ok = run({"chi", "--n", "2", "--q", "4", "--degrees", "1,1,1,1"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("chi            1\n") != std::string::npos);
}

TEST_CASE("formal q warns on stderr but computes") {
  auto r = run({"chi", "--n", "3", "--q", "6", "--degrees", "1,1"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("warning: q = 6 is not a prime power") != std::string::npos);
  CHECK(r.out.find("chi            7\n") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({"chi", "--q", "2", "--degrees", "1,1"}).code == 1);
  CHECK(run({"verify", "bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  auto r = run({"chi", "--q", "2"});
  CHECK(r.err.find("usage error:") == 0);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("chi") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify suites report per-case counts") {
  auto r = run({"verify", "andrews"});
  CHECK(r.code == 0);
  CHECK(r.out == "andrews: 10 cases, 0 failures\n");

  auto d = run({"verify", "degrees"});
  CHECK(d.code == 0);
  CHECK(d.out.find("degrees:") == 0);
  CHECK(d.out.find(" 0 failures") != std::string::npos);
}

TEST_CASE("building command dumps a parseable complex") {
  std::string path = "cli_ball_dump.txt";
  auto r = run({"building", "--n", "2", "--p", "3", "--radius", "2", "--dump", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("vertices     17\n") != std::string::npos);
  CHECK(r.out.find("chi          1\n") != std::string::npos);
  CHECK(r.out.find("dump " + path) != std::string::npos);

  std::ifstream f(path);
  REQUIRE(f.good());
  auto x = btq::simplicial::Complex::parse_dump(f);
  CHECK(x.vertex_count() == 17);
  CHECK(x.simplex_count(1) == 16);
  std::remove(path.c_str());

  auto guard = run({"building", "--n", "2", "--p", "5", "--radius", "9"});
  CHECK(guard.code == 2);
  CHECK(guard.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("demo command matches the arithmetic") {
  auto r = run({"demo", "--n", "3", "--q", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.out ==
        "n            3\n"
        "q            4\n"
        "vertices     3\n"
        "simplices_1  3\n"
        "simplices_2  5\n"
        "chi          5\n");

  CHECK(run({"demo", "--n", "4", "--q", "2"}).code == 2);
}
