#pragma once

#include <string_view>

#include "simplecubic/arith.hpp"

namespace simplecubic {

/// 3-adic behaviour of Δ_t = t² + 3t + 9.
enum class ThreeAdicCase {
  kZero,               // 3 ∤ t: v_3(Δ) = 0
  kTwo,                // t ≡ 0, 6 mod 9: v_3(Δ) = 2, 3 | c
  kThreeRamified,      // t ≡ 3, 21 mod 27: v_3(Δ) = 3, 3 | c
  kThreeUnramified,    // t ≡ 12 mod 27: v_3(Δ) = 3, 3 ∤ c
};

std::string_view to_string(ThreeAdicCase c);
ThreeAdicCase three_adic_case_from_string(std::string_view s);

/// True when 3 divides the conductor in this case.
constexpr bool three_divides_conductor(ThreeAdicCase c) {
  return c == ThreeAdicCase::kTwo || c == ThreeAdicCase::kThreeRamified;
}

struct ConductorData {
  Integer t;
  Factorization delta;
  Factorization conductor;
  ThreeAdicCase three_case;

  /// Δ = c, i.e. Z[θ_t] is the full ring of integers.
  bool z_theta_maximal() const { return delta.value() == conductor.value(); }
};

/// t² + 3t + 9. Requires t >= -1 (normalize with reduce_param first).
Integer delta(const Integer& t);

ThreeAdicCase three_case(const Integer& t);

/// Δ_t, c_{K_t} and their factorizations. The conductor is the product of
/// the primes p ≠ 3 with v_p(Δ) ≢ 0 mod 3, times 9 when 3 ramifies.
ConductorData conductor(const Integer& t);

}  // namespace simplecubic
