#include "simplecubic/conductor.hpp"

#include <stdexcept>

namespace simplecubic {

namespace {

void require_normalized(const Integer& t, const char* what) {
  if (t < -1)
    throw std::invalid_argument(std::string(what) + ": parameter " + t.get_str() +
                                " is below -1; normalize it first");
}

}  // namespace

std::string_view to_string(ThreeAdicCase c) {
  switch (c) {
    case ThreeAdicCase::kZero: return "V3_ZERO";
    case ThreeAdicCase::kTwo: return "V3_TWO";
    case ThreeAdicCase::kThreeRamified: return "V3_THREE_RAMIFIED";
    case ThreeAdicCase::kThreeUnramified: return "V3_THREE_UNRAMIFIED";
  }
  return "?";
}

ThreeAdicCase three_adic_case_from_string(std::string_view s) {
  for (auto c : {ThreeAdicCase::kZero, ThreeAdicCase::kTwo, ThreeAdicCase::kThreeRamified,
                 ThreeAdicCase::kThreeUnramified}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown 3-adic case '" + std::string(s) + "'");
}

Integer delta(const Integer& t) {
  require_normalized(t, "delta");
  return t * t + 3 * t + 9;
}

ThreeAdicCase three_case(const Integer& t) {
  require_normalized(t, "three_case");
  const unsigned long r27 = mod_floor(t, 27ul);
  if (r27 % 3 != 0) return ThreeAdicCase::kZero;
  if (r27 % 9 != 3) return ThreeAdicCase::kTwo;
  return r27 == 12 ? ThreeAdicCase::kThreeUnramified : ThreeAdicCase::kThreeRamified;
}

ConductorData conductor(const Integer& t) {
  ConductorData out{t, factor(delta(t)), Factorization(), three_case(t)};
  std::vector<PrimePower> primes;
  if (three_divides_conductor(out.three_case)) primes.push_back({Integer(3), 2});
  for (const auto& f : out.delta.factors()) {
    if (f.prime != 3 && f.exponent % 3 != 0) primes.push_back({f.prime, 1});
  }
  out.conductor = Factorization::from_factors(std::move(primes));
  return out;
}

}  // namespace simplecubic
