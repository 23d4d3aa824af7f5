#pragma once

// Command-line front end. Table output is plain aligned text and JSON uses
// the decimal-string schema; both are byte-deterministic for a given input,
// which the golden tests rely on.
//
// Exit codes: 0 success, 1 usage, 2 rejected input, 3 broken internal
// invariant (including verification suite failures).

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "btq/building.hpp"
#include "btq/errors.hpp"
#include "btq/invariants.hpp"
#include "btq/ramification.hpp"
#include "btq/report_json.hpp"
#include "btq/verify.hpp"

namespace btq::cli {

namespace detail {

inline int exit_class(errc c) {
  switch (c) {
    case errc::not_divisible:
    case errc::integrality_failure:
    case errc::non_integral_theta:
    case errc::internal_check_failed:
      return 3;
    default:
      return 2;
  }
}

inline void print_table(std::ostream& out,
                        const std::vector<std::pair<std::string, std::string>>& rows) {
  size_t w = 0;
  for (const auto& [k, v] : rows) w = std::max(w, k.size());
  for (const auto& [k, v] : rows)
    out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

inline std::string join(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s;
}

inline std::string join_big(const std::vector<BigInt>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i].str();
  }
  return s;
}

inline void dump_to(const std::string& path, const simplicial::Complex& x) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(errc::invalid_parameter, "cannot open dump path " + path);
  x.dump(f);
  if (!f) fail(errc::invalid_parameter, "write failed for dump path " + path);
}

struct Options {
  long long q = 2;
  int n = 2;
  uint32_t p = 2;
  int radius = 1;
  std::vector<int> degrees;
  bool symbolic = false;
  bool raw = false;
  bool json = false;
  std::string dump_path;
  std::string suite;
};

inline void print_warnings(const arith::RamificationData& d, std::ostream& err) {
  for (const auto& w : arith::validate_data(d).warnings) err << "warning: " << w << "\n";
}

inline int run_chi(const Options& o, std::ostream& out, std::ostream& err) {
  auto d = arith::make_data(o.q, o.n, o.degrees);
  print_warnings(d, err);
  if (o.raw) {
    BigRat value = arith::chi_raw(d);
    if (o.json) {
      out << arith::json_raw_report(d, value).dump(2) << "\n";
      return 0;
    }
    print_table(out, {{"n", std::to_string(d.n)},
                      {"q", std::to_string(d.q)},
                      {"degrees", join(d.degrees)},
                      {"wp_n", std::to_string(arith::wp_product(d, d.n))},
                      {"chi_raw", rat_string(value)}});
    return 0;
  }
  auto c = arith::chi(d, o.symbolic);
  auto e = arith::embedding_numbers(d);
  if (o.json) {
    out << arith::json_report(d, e, &c).dump(2) << "\n";
    return 0;
  }
  std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(d.n)},
      {"q", std::to_string(d.q)},
      {"degrees", join(d.degrees)},
      {"wp_n", std::to_string(arith::wp_product(d, d.n))},
      {"volume", rat_string(c.volume)},
      {"chi", c.chi.str()}};
  if (c.chi_poly) rows.emplace_back("chi_poly", c.chi_poly->str());
  rows.emplace_back("W", c.W.str());
  rows.emplace_back("mB", e.mB.str());
  rows.emplace_back("local_m", join_big(e.local_m));
  rows.emplace_back("congruence_ok", c.congruence_ok ? "true" : "false");
  rows.emplace_back("h", join_big(c.h));
  print_table(out, rows);
  return 0;
}

inline int run_theta(const Options& o, std::ostream& out, std::ostream& err) {
  auto d = arith::make_data(o.q, o.n, o.degrees.empty() ? std::vector<int>{1, 1} : o.degrees);
  print_warnings(d, err);
  auto t = arith::theta(d);
  if (o.json) {
    auto c = arith::chi(d);
    auto e = arith::embedding_numbers(d);
    out << arith::json_report(d, e, &c, &t).dump(2) << "\n";
    return 0;
  }
  auto c = arith::chi(d);
  print_table(out, {{"n", std::to_string(d.n)},
                    {"q", std::to_string(d.q)},
                    {"degrees", join(d.degrees)},
                    {"chi", c.chi.str()},
                    {"theta", join_big(t.theta)},
                    {"closed_form_used", t.closed_form_used ? "true" : "false"}});
  return 0;
}

inline int run_embed(const Options& o, std::ostream& out, std::ostream& err) {
  auto d = arith::make_data(o.q, o.n, o.degrees);
  print_warnings(d, err);
  arith::require_valid(d);
  auto e = arith::embedding_numbers(d);
  if (o.json) {
    out << arith::json_report(d, e).dump(2) << "\n";
    return 0;
  }
  std::string sub;
  for (size_t i = 0; i < e.subfields.size(); ++i) {
    if (i) sub += ", ";
    sub += "m=" + std::to_string(e.subfields[i].first) +
           (e.subfields[i].second ? ":yes" : ":no");
  }
  print_table(out, {{"n", std::to_string(d.n)},
                    {"q", std::to_string(d.q)},
                    {"degrees", join(d.degrees)},
                    {"wp_n", std::to_string(arith::wp_product(d, d.n))},
                    {"mB", e.mB.str()},
                    {"W", e.W.str()},
                    {"local_m", join_big(e.local_m)},
                    {"subfields", sub}});
  return 0;
}

inline int run_building(const Options& o, std::ostream& out) {
  auto b = building::ball(building::standard_vertex(o.n, o.p), o.radius);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(o.n)},
      {"p", std::to_string(o.p)},
      {"radius", std::to_string(o.radius)},
      {"vertices", std::to_string(b.complex.vertex_count())}};
  for (int i = 1; i <= b.complex.dimension(); ++i)
    rows.emplace_back("simplices_" + std::to_string(i),
                      std::to_string(b.complex.simplex_count(i)));
  rows.emplace_back("chi", b.complex.euler_characteristic().str());
  print_table(out, rows);
  if (!o.dump_path.empty()) {
    dump_to(o.dump_path, b.complex);
    out << "dump " << o.dump_path << "\n";
  }
  return 0;
}

inline int run_demo(const Options& o, std::ostream& out) {
  auto x = arith::multilayer_demo(o.n, o.q);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(o.n)},
      {"q", std::to_string(o.q)},
      {"vertices", std::to_string(x.vertex_count())}};
  for (int i = 1; i <= x.dimension(); ++i)
    rows.emplace_back("simplices_" + std::to_string(i), std::to_string(x.simplex_count(i)));
  rows.emplace_back("chi", x.euler_characteristic().str());
  print_table(out, rows);
  if (!o.dump_path.empty()) {
    dump_to(o.dump_path, x);
    out << "dump " << o.dump_path << "\n";
  }
  return 0;
}

inline int run_verify(const Options& o, std::ostream& out) {
  std::vector<verify::SuiteResult> results;
  if (o.suite == "andrews") results.push_back(verify::verify_andrews());
  else if (o.suite == "degrees") results.push_back(verify::verify_degrees());
  else if (o.suite == "lemma21") results.push_back(verify::verify_lemma21());
  else if (o.suite == "congruence") results.push_back(verify::verify_congruence());
  else if (o.suite == "integrality") results.push_back(verify::verify_integrality());
  else results = verify::verify_all();

  bool ok = true;
  for (const auto& r : results) {
    out << r.name << ": " << r.cases << " cases, " << r.failures << " failures\n";
    size_t shown = 0;
    for (const auto& f : r.failing) {
      if (++shown > 20) {
        out << "  ... " << (r.failing.size() - 20) << " more\n";
        break;
      }
      out << "  FAIL " << f << "\n";
    }
    ok = ok && r.ok();
  }
  return ok ? 0 : 3;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of lattice quotients of PGL_n buildings"};
  app.require_subcommand(1);

  detail::Options o;

  auto* chi = app.add_subcommand("chi", "Euler characteristic of the quotient");
  chi->add_option("--n", o.n, "degree of the division algebra")->required();
  chi->add_option("--q", o.q, "size of the constant field")->required();
  chi->add_option("--degrees", o.degrees, "degrees of the ramified places")
      ->required()
      ->delimiter(',');
  chi->add_flag("--symbolic", o.symbolic, "also compute chi as a polynomial in q");
  chi->add_flag("--raw", o.raw, "rational evaluation without the prime-n theorem");
  chi->add_flag("--json", o.json, "JSON output");

  auto* theta = app.add_subcommand("theta", "simplex counts of the quotient");
  theta->add_option("--n", o.n, "degree of the division algebra")->required();
  theta->add_option("--q", o.q, "size of the constant field")->required();
  theta->add_option("--degrees", o.degrees, "degrees of the ramified places (default 1,1)")
      ->delimiter(',');
  theta->add_flag("--json", o.json, "JSON output");

  auto* embed = app.add_subcommand("embed", "optimal embedding numbers");
  embed->add_option("--n", o.n, "degree of the division algebra")->required();
  embed->add_option("--q", o.q, "size of the constant field")->required();
  embed->add_option("--degrees", o.degrees, "degrees of the ramified places")
      ->required()
      ->delimiter(',');
  embed->add_flag("--json", o.json, "JSON output");

  auto* bld = app.add_subcommand("building", "enumerate a ball in the building");
  bld->add_option("--n", o.n, "rank (vertices are classes of rank-n lattices)")->required();
  bld->add_option("--p", o.p, "residue field size (prime)")->required();
  bld->add_option("--radius", o.radius, "ball radius")->required();
  bld->add_option("--dump", o.dump_path, "write the complex to this path");

  auto* demo = app.add_subcommand("demo", "explicit quotient complex for two degree-1 places");
  demo->add_option("--n", o.n, "2 or 3")->required();
  demo->add_option("--q", o.q, "size of the constant field")->required();
  demo->add_option("--dump", o.dump_path, "write the complex to this path");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", o.suite, "andrews | degrees | lemma21 | congruence | integrality | all")
      ->required()
      ->check(CLI::IsMember({"andrews", "degrees", "lemma21", "congruence", "integrality", "all"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (chi->parsed()) return detail::run_chi(o, out, err);
    if (theta->parsed()) return detail::run_theta(o, out, err);
    if (embed->parsed()) return detail::run_embed(o, out, err);
    if (bld->parsed()) return detail::run_building(o, out);
    if (demo->parsed()) return detail::run_demo(o, out);
    if (ver->parsed()) return detail::run_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_class(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace btq::cli
