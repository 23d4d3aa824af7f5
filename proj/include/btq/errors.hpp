#pragma once

#include <stdexcept>
#include <string>

namespace btq {

// Every failure the library can signal, one code per condition so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class errc {
  invalid_parameter,
  not_divisible,
  zero_denominator,
  closure_violation,
  duplicate_vertex_in_simplex,
  inconsistent_action,
  star_violation,
  not_admissible,
  unknown_simplex,
  group_too_large,
  too_large,
  unsupported_field,
  singular_basis,
  precision_exceeded,
  too_few_places,
  odd_ramification_for_n2,
  bad_invariants,
  non_prime_n,
  integrality_failure,
  non_integral_theta,
  internal_check_failed,
  unsupported,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::not_divisible: return "NotDivisible";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::closure_violation: return "ClosureViolation";
    case errc::duplicate_vertex_in_simplex: return "DuplicateVertexInSimplex";
    case errc::inconsistent_action: return "InconsistentAction";
    case errc::star_violation: return "StarViolation";
    case errc::not_admissible: return "NotAdmissible";
    case errc::unknown_simplex: return "UnknownSimplex";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::too_large: return "TooLarge";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::singular_basis: return "SingularBasis";
    case errc::precision_exceeded: return "PrecisionExceeded";
    case errc::too_few_places: return "TooFewPlaces";
    case errc::odd_ramification_for_n2: return "OddRamificationForN2";
    case errc::bad_invariants: return "BadInvariants";
    case errc::non_prime_n: return "NonPrimeN";
    case errc::integrality_failure: return "IntegralityFailure";
    case errc::non_integral_theta: return "NonIntegralTheta";
    case errc::internal_check_failed: return "InternalCheckFailed";
    case errc::unsupported: return "Unsupported";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace btq
