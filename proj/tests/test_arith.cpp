#include <doctest.h>

#include <random>

#include "simplecubic/arith.hpp"

using namespace simplecubic;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer pow_int(const Integer& b, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

}  // namespace

TEST_CASE("vp") {
  CHECK(vp(27, 3) == 3);
  CHECK(vp(189, 3) == 3);
  CHECK(vp(7, 5) == 0);
  CHECK(vp(-54, 3) == 3);
  CHECK_THROWS_AS(vp(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(vp(12, 4), std::invalid_argument);
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(5479));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  // 10296668263 = 7^3 * 5479^2
  CHECK(Integer(343) * Integer(5479) * Integer(5479) == Integer("10296668263"));
  CHECK_FALSE(is_prime(Integer("10296668263")));
}

TEST_CASE("is_prime on strong pseudoprimes and large values") {
  for (const char* n : {"561", "41041", "3215031751", "2152302898747", "3474749660383",
                        "341550071728321", "3825123056546413051", "318665857834031151167461"}) {
    CAPTURE(n);
    CHECK_FALSE(is_prime(Integer(n)));
  }
  CHECK(is_prime(Integer("18446744073709551557")));  // largest prime below 2^64
  CHECK(is_prime(pow_int(2, 127) - 1));
  CHECK(is_prime(pow_int(2, 89) - 1));
  CHECK_FALSE(is_prime(pow_int(2, 67) - 1));
  CHECK_FALSE(is_prime(pow_int(2, 128) + 1));
}

TEST_CASE("is_prime agrees with trial division up to 10^6") {
  std::vector<bool> composite(1'000'001, false);
  composite[0] = composite[1] = true;
  for (std::size_t i = 2; i * i <= 1'000'000; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= 1'000'000; j += i) composite[j] = true;
  std::size_t mismatches = 0;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n)
    if (is_prime_u64(n) != !composite[n]) ++mismatches;
  CHECK(mismatches == 0);
  // Spot-check the sieve itself against naive trial division.
  for (std::uint64_t n : {1ull, 2ull, 97ull, 7919ull, 999983ull, 999981ull})
    CHECK(trial_division_prime(n) == !composite[n]);
}

TEST_CASE("factor examples") {
  CHECK(factor(189).to_string() == "3^3 7^1");
  CHECK(factor(1).factors().empty());
  CHECK(factor(1).value() == 1);
  const auto f = factor(Integer("10296668263"));
  CHECK(f.to_string() == "7^3 5479^2");
  CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor beyond trial division and beyond 64 bits") {
  // Two primes above the trial bound, product below 2^64 (u64 rho path).
  const Integer p("1000000007"), q("998244353");
  CHECK(factor(p * q).to_string() == "998244353^1 1000000007^1");
  // Product above 2^64 (multiprecision rho path).
  const Integer m61 = pow_int(2, 61) - 1;
  const auto big = factor(m61 * p * 9);
  CHECK(big.to_string() == "3^2 1000000007^1 2305843009213693951^1");
  CHECK(factor(p * p * p).to_string() == "1000000007^3");
  CHECK(factor(p * p * q).to_string() == "998244353^1 1000000007^2");
}

TEST_CASE("factor round trip and vp consistency on random inputs") {
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 2000; ++i) {
    Integer n = from_uint64(rng() >> (i % 2 ? 4 : 30)) + 1;
    if (i % 7 == 0) n *= from_uint64(rng() >> 20) + 1;  // occasionally above 2^64
    const auto f = factor(n);
    CAPTURE(n.get_str());
    CHECK(f.value() == n);
    Integer product = 1;
    Integer previous = 1;
    for (const auto& pe : f.factors()) {
      CHECK(is_prime(pe.prime));
      CHECK(pe.prime > previous);
      CHECK(pe.exponent >= 1);
      CHECK(vp(n, pe.prime) == pe.exponent);
      product *= pow_int(pe.prime, pe.exponent);
      previous = pe.prime;
    }
    CHECK(product == n);
    for (unsigned long q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul})
      if (!f.divides_value(q)) CHECK(vp(n, q) == 0);
  }
}

TEST_CASE("cube_root_exact") {
  CHECK(cube_root_exact(27) == Integer(3));
  CHECK(cube_root_exact(343) == Integer(7));
  CHECK_FALSE(cube_root_exact(49).has_value());
  CHECK(cube_root_exact(1) == Integer(1));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Integer n = from_uint64(rng() >> 24) + 1;  // up to 2^40
    const Integer cube = n * n * n;
    CHECK(cube_root_exact(cube) == n);
    CHECK_FALSE(cube_root_exact(cube + 1).has_value());
  }
}

TEST_CASE("Factorization parse and format") {
  const auto f = Factorization::parse("7^1 3^3");
  CHECK(f.to_string() == "3^3 7^1");
  CHECK(f.value() == 189);
  CHECK(Factorization::parse("").value() == 1);
  CHECK(Factorization::parse("5479") == Factorization::parse("5479^1"));
  CHECK_THROWS_AS(Factorization::parse("4^1"), std::invalid_argument);
  CHECK_THROWS_AS(Factorization::parse("x^2"), std::invalid_argument);
}

TEST_CASE("mod_floor handles negative values") {
  CHECK(mod_floor(Integer(-1), 27ul) == 26);
  CHECK(mod_floor(Integer(-4), Integer(3)) == 2);
}
