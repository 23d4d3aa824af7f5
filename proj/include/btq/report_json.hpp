#pragma once

// JSON serialization of the arithmetic reports. Every integer is emitted as
// a decimal string, because the values outgrow both double and int64 and the
// consumers diff these files byte for byte. Key order is part of the format.

#include <string>

#include <json.hpp>

#include "btq/invariants.hpp"
#include "btq/numbers.hpp"
#include "btq/qpoly.hpp"
#include "btq/ramification.hpp"

namespace btq::arith {

namespace detail {

inline nlohmann::ordered_json rat_json(const BigRat& r) {
  nlohmann::ordered_json j;
  j["num"] = rat_num(r).str();
  j["den"] = rat_den(r).str();
  return j;
}

}  // namespace detail

// one schema for chi/theta/embed; sections not computed are simply absent
inline nlohmann::ordered_json json_report(const RamificationData& d,
                                          const EmbeddingReport& e,
                                          const ChiReport* c = nullptr,
                                          const ThetaReport* t = nullptr) {
  nlohmann::ordered_json j;
  j["n"] = std::to_string(d.n);
  j["q"] = std::to_string(d.q);
  j["degrees"] = nlohmann::ordered_json::array();
  for (int deg : d.degrees) j["degrees"].push_back(std::to_string(deg));
  j["wp_n"] = std::to_string(wp_product(d, d.n));
  if (c) {
    j["volume"] = detail::rat_json(c->volume);
    j["chi"] = c->chi.str();
    if (c->chi_poly) {
      auto coeffs = nlohmann::ordered_json::array();
      int deg = c->chi_poly->degree().value_or(0);
      for (int k = 0; k <= deg; ++k) coeffs.push_back(c->chi_poly->coeff(k).str());
      j["chi_poly"] = coeffs;
    }
  }
  j["W"] = e.W.str();
  j["mB"] = e.mB.str();
  j["local_m"] = nlohmann::ordered_json::array();
  for (const auto& m : e.local_m) j["local_m"].push_back(m.str());
  if (c) {
    j["congruence_ok"] = c->congruence_ok;
    j["h"] = nlohmann::ordered_json::array();
    for (const auto& x : c->h) j["h"].push_back(x.str());
  }
  if (t) {
    j["theta"] = nlohmann::ordered_json::array();
    for (const auto& x : t->theta) j["theta"].push_back(x.str());
  }
  return j;
}

inline nlohmann::ordered_json json_raw_report(const RamificationData& d, const BigRat& value) {
  nlohmann::ordered_json j;
  j["n"] = std::to_string(d.n);
  j["q"] = std::to_string(d.q);
  j["degrees"] = nlohmann::ordered_json::array();
  for (int deg : d.degrees) j["degrees"].push_back(std::to_string(deg));
  j["wp_n"] = std::to_string(wp_product(d, d.n));
  j["chi_raw"] = detail::rat_json(value);
  return j;
}

}  // namespace btq::arith
