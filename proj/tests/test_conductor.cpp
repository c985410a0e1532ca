#include <doctest.h>

#include "simplecubic/conductor.hpp"

using namespace simplecubic;

TEST_CASE("delta") {
  CHECK(delta(-1) == 7);
  CHECK(delta(0) == 9);
  CHECK(delta(54) == 3087);
  CHECK(delta(54) == 9 * 343);
  CHECK_THROWS_AS(delta(-2), std::invalid_argument);
}

TEST_CASE("three_case") {
  CHECK(three_case(1) == ThreeAdicCase::kZero);
  CHECK(three_case(-1) == ThreeAdicCase::kZero);
  CHECK(three_case(12) == ThreeAdicCase::kThreeUnramified);
  CHECK(three_case(21) == ThreeAdicCase::kThreeRamified);
  CHECK(three_case(3) == ThreeAdicCase::kThreeRamified);
  CHECK(three_case(0) == ThreeAdicCase::kTwo);
  CHECK(three_case(6) == ThreeAdicCase::kTwo);
  for (long t = -1; t <= 3000; ++t) {
    const unsigned v3 = vp(delta(t), 3);
    switch (three_case(t)) {
      case ThreeAdicCase::kZero: CHECK(v3 == 0); break;
      case ThreeAdicCase::kTwo: CHECK(v3 == 2); break;
      default: CHECK(v3 == 3); break;
    }
  }
  for (auto c : {ThreeAdicCase::kZero, ThreeAdicCase::kTwo, ThreeAdicCase::kThreeRamified,
                 ThreeAdicCase::kThreeUnramified})
    CHECK(three_adic_case_from_string(to_string(c)) == c);
}

TEST_CASE("conductor examples") {
  const auto c21 = conductor(21);
  CHECK(c21.conductor.value() == 171);
  CHECK(c21.conductor.to_string() == "3^2 19^1");
  const auto c12 = conductor(12);
  CHECK(c12.conductor.value() == 7);
  CHECK(c12.delta.to_string() == "3^3 7^1");
  const auto c740 = conductor(740);
  CHECK(c740.conductor.value() == 1603);
  CHECK(c740.conductor.to_string() == "7^1 229^1");
  CHECK(c740.delta.to_string() == "7^4 229^1");
  CHECK(conductor(0).z_theta_maximal());
  CHECK_FALSE(conductor(5).z_theta_maximal());
}

TEST_CASE("conductor invariants") {
  for (long t = -1; t <= 20000; ++t) {
    const auto data = conductor(t);
    const Integer& d = data.delta.value();
    const Integer& c = data.conductor.value();
    CHECK(d == delta(t));
    CHECK(mpz_divisible_p(d.get_mpz_t(), c.get_mpz_t()));
    for (const auto& pe : data.conductor.factors()) {
      if (pe.prime == 3) {
        CHECK(pe.exponent == 2);
      } else {
        CHECK(pe.exponent == 1);
        CHECK(mod_floor(pe.prime, 3ul) == 1);
      }
    }
    for (const auto& pe : data.delta.factors()) {
      if (pe.prime == 3) continue;
      CHECK(data.conductor.divides_value(pe.prime) == (pe.exponent % 3 != 0));
    }
    CHECK(data.conductor.divides_value(3) == three_divides_conductor(data.three_case));
  }
}

TEST_CASE("conductor is invariant under t -> -(t+3)") {
  for (long t = -300; t <= 300; ++t) {
    const Integer u = t >= -1 ? Integer(t) : Integer(-(t + 3));
    const Integer mirror = -(u + 3);
    // The mirrored parameter normalizes back to u; both have the same Δ.
    CHECK(Integer(mirror * mirror + 3 * mirror + 9) == delta(u));
    const auto a = conductor(u);
    const auto b = conductor(mirror < -1 ? Integer(-(mirror + 3)) : mirror);
    CHECK(a.delta == b.delta);
    CHECK(a.conductor == b.conductor);
  }
}
