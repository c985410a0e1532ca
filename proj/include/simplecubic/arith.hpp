#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace simplecubic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when Pollard-Brent exhausts its retry budget on a composite.
class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete prime factorization of a positive integer, primes ascending.
class Factorization {
 public:
  /// The empty factorization (value 1).
  Factorization() = default;

  /// Validates and canonicalizes: merges repeated primes, sorts, checks
  /// primality of every base. Throws std::invalid_argument otherwise.
  static Factorization from_factors(std::vector<PrimePower> factors);

  /// Parses the "p^e p^e ..." form written by to_string(); "" or "1" is 1.
  static Factorization parse(const std::string& text);

  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  const Integer& value() const noexcept { return value_; }

  /// Exponent of p, zero when p does not divide the value.
  unsigned exponent_of(const Integer& p) const;
  bool divides_value(const Integer& p) const { return exponent_of(p) > 0; }

  /// "3^3 7^1"; the empty factorization renders as "".
  std::string to_string() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<PrimePower> factors_;
  Integer value_ = 1;
};

/// Exponent of the prime p in n. Throws std::invalid_argument for n = 0 or
/// composite p.
unsigned vp(const Integer& n, const Integer& p);

/// Deterministic below 2^64; above it, 64 Miller-Rabin rounds with bases
/// drawn from a fixed-seed generator.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Trial division up to kTrialDivisionBound, then Pollard-Brent on the
/// remaining cofactor.
Factorization factor(const Integer& n);

std::optional<Integer> cube_root_exact(const Integer& n);

inline constexpr std::uint32_t kTrialDivisionBound = 10000;

/// Non-negative residue of n modulo m (m > 0).
Integer mod_floor(const Integer& n, const Integer& m);
unsigned long mod_floor(const Integer& n, unsigned long m);

bool fits_int64(const Integer& n);
bool fits_uint64(const Integer& n);
std::uint64_t to_uint64(const Integer& n);
Integer from_uint64(std::uint64_t v);
Integer from_int64(std::int64_t v);
std::int64_t to_int64(const Integer& n);

}  // namespace simplecubic
