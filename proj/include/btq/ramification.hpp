#pragma once

// Input data for the arithmetic pipeline: the constant field size q, the
// degree n of the division algebra, and the multiset of degrees of the
// ramified places (the place at infinity is never ramified here). Local
// invariants are optional; they only matter for validation and display,
// since every downstream formula depends on the degrees alone.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "btq/errors.hpp"
#include "btq/numbers.hpp"

namespace btq::arith {

struct RamificationData {
  long long q = 2;
  int n = 2;
  std::vector<int> degrees;                         // sorted multiset
  std::optional<std::vector<long long>> invariants; // a_x mod n, parallel to degrees
};

inline RamificationData make_data(long long q, int n, std::vector<int> degrees,
                                  std::optional<std::vector<long long>> invariants = std::nullopt) {
  RamificationData d;
  d.q = q;
  d.n = n;
  std::sort(degrees.begin(), degrees.end());
  d.degrees = std::move(degrees);
  d.invariants = std::move(invariants);
  return d;
}

struct ValidationIssue {
  errc code;
  std::string message;
};

struct ValidationResult {
  std::vector<ValidationIssue> errors;
  std::vector<std::string> warnings;
  bool ok() const { return errors.empty(); }
};

// Shape checks that involve neither q nor the invariants; this is the level
// of validation the symbolic (q formal) routines need.
inline ValidationResult validate_structure(int n, const std::vector<int>& degrees) {
  ValidationResult r;
  auto err = [&](errc c, std::string m) { r.errors.push_back({c, std::move(m)}); };
  if (n < 2) err(errc::invalid_parameter, "n must be at least 2");
  for (int deg : degrees)
    if (deg < 1) err(errc::invalid_parameter, "place degrees must be positive");
  if (degrees.size() < 2)
    err(errc::too_few_places, "at least two ramified places are required");
  if (n == 2 && degrees.size() % 2 != 0)
    err(errc::odd_ramification_for_n2, "n = 2 requires an even number of ramified places");
  return r;
}

inline ValidationResult validate_structure(const RamificationData& d) {
  ValidationResult r = validate_structure(d.n, d.degrees);
  auto err = [&](errc c, std::string m) { r.errors.push_back({c, std::move(m)}); };

  if (d.q < 2) err(errc::invalid_parameter, "q must be at least 2");

  if (d.invariants) {
    const auto& a = *d.invariants;
    if (a.size() != d.degrees.size()) {
      err(errc::bad_invariants, "one invariant per ramified place is required");
    } else if (d.n >= 2) {
      long long sum = 0;
      for (long long ax : a) {
        long long m = ((ax % d.n) + d.n) % d.n;
        if (std::gcd(m, static_cast<long long>(d.n)) != 1)
          err(errc::bad_invariants, "invariant " + std::to_string(ax) + " is not coprime to n");
        sum = (sum + m) % d.n;
      }
      if (sum != 0) err(errc::bad_invariants, "invariants must sum to 0 mod n");
    }
  }
  return r;
}

// Gauss' count of monic irreducible polynomials of degree d over F_q:
// (1/d) * sum_{e | d} mu(e) q^(d/e). These are exactly the finite places of
// degree d of the rational function field with constant field F_q.
inline BigInt monic_irreducible_count(long long q, int d) {
  BigInt total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    int mu = mobius(e);
    if (mu == 0) continue;
    total += BigInt(mu) * big_pow(BigInt(q), static_cast<unsigned>(d / e));
  }
  return total / d;
}

inline ValidationResult validate_data(const RamificationData& d) {
  ValidationResult r = validate_structure(d);

  if (d.q >= 2 && !is_prime_power(d.q))
    r.warnings.push_back("q = " + std::to_string(d.q) +
                         " is not a prime power; results are formal evaluations");
  if (!r.ok()) return r;

  // The degrees list the degrees of distinct finite places, and only
  // monic_irreducible_count(q, d) places of degree d exist. Asking for more
  // describes no ramification set at all, and the closed formulas then
  // produce values with no quotient behind them (for example a chi larger
  // than 1 in the n = 2 graph case). Skipped for non-prime-power q, where
  // the whole computation is already flagged as formal.
  if (is_prime_power(d.q)) {
    std::map<int, int> mult;
    for (int deg : d.degrees) ++mult[deg];
    for (const auto& [deg, m] : mult) {
      BigInt have = monic_irreducible_count(d.q, deg);
      if (BigInt(m) > have)
        r.errors.push_back(
            {errc::invalid_parameter,
             "no such ramification set: only " + have.str() + " finite place(s) of degree " +
                 std::to_string(deg) + " exist over F_" + std::to_string(d.q) + "(T), but " +
                 std::to_string(m) + " are listed"});
    }
  }
  return r;
}

namespace detail {
inline void require_ok(const ValidationResult& r) {
  if (!r.ok()) fail(r.errors.front().code, r.errors.front().message);
}
}  // namespace detail

inline void require_structural(const RamificationData& d) {
  detail::require_ok(validate_structure(d));
}

inline void require_valid(const RamificationData& d) { detail::require_ok(validate_data(d)); }

inline void require_prime_n(int n) {
  if (!is_prime(n))
    fail(errc::non_prime_n,
         "n = " + std::to_string(n) + " is not prime; only the raw evaluation is available");
}

inline void require_prime_n(const RamificationData& d) { require_prime_n(d.n); }

// A concrete coprime assignment summing to 0 mod n, for display: all places
// get 1 except the last two, which absorb the balance. Exists whenever the
// data validates and n is prime.
inline std::vector<long long> default_invariants(const RamificationData& d) {
  if (d.invariants) return *d.invariants;
  const long long n = d.n;
  const size_t k = d.degrees.size();
  std::vector<long long> a(k, 1);
  if (k < 2) return a;
  for (long long x = 1; x < n; ++x) {
    long long y = ((2 - static_cast<long long>(k) - x) % n + n) % n;
    if (y != 0 && std::gcd(x, n) == 1 && std::gcd(y, n) == 1) {
      a[k - 2] = x;
      a[k - 1] = y;
      return a;
    }
  }
  fail(errc::bad_invariants, "no coprime invariant assignment exists");
}

}  // namespace btq::arith
