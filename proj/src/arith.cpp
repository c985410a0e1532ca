#include "simplecubic/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace simplecubic {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr int kBigMillerRabinRounds = 64;
constexpr int kRhoRetries = 64;
constexpr u64 kRhoIterationCap = u64{1} << 26;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const Integer& n, const Integer& a) {
  Integer d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Integer n_minus_1 = n - 1;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionBound; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of
// the odd composite n, or 0 when this increment fails.
u64 brent_u64(u64 n, u64 increment, u64 start) {
  auto step = [&](u64 v) {
    u64 s = mulmod(v, v, n) + increment;
    return s >= n ? s - n : s;
  };
  constexpr u64 kBatch = 128;
  u64 y = start % n, x = y, ys = y, q = 1, g = 1;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = step(y);
    for (u64 k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const u64 lim = std::min(kBatch, r - k);
      for (u64 i = 0; i < lim; ++i) {
        y = step(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
    if (r > kRhoIterationCap) return 0;
  }
  if (g == n) {
    // Batch overshot; replay one step at a time from the saved point.
    do {
      ys = step(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

Integer brent_big(const Integer& n, unsigned long increment, unsigned long start) {
  auto step = [&](const Integer& v) -> Integer { return (v * v + increment) % n; };
  constexpr unsigned long kBatch = 128;
  Integer y = start, x = y, ys = y, q = 1, g = 1, diff;
  for (unsigned long r = 1; g == 1; r <<= 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const unsigned long lim = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = step(y);
        diff = abs(x - y);
        q = q * diff % n;
      }
      g = gcd(q, n);
    }
    if (r > kRhoIterationCap) return 0;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

Integer split(const Integer& n) {
  if (fits_uint64(n)) {
    const u64 m = to_uint64(n);
    for (int attempt = 0; attempt < kRhoRetries; ++attempt) {
      if (u64 d = brent_u64(m, 1 + attempt, 2 + attempt); d != 0) return from_uint64(d);
    }
  } else {
    for (int attempt = 0; attempt < kRhoRetries; ++attempt) {
      Integer d = brent_big(n, 1 + attempt, 2 + attempt);
      if (d != 0) return d;
    }
  }
  throw FactorizationError("Pollard-Brent retries exhausted for " + n.get_str());
}

void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (Integer r; mpz_perfect_square_p(n.get_mpz_t())) {
    // rho is slow on prime squares; take the root directly.
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    factor_cofactor(r, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  const Integer d = split(n);
  factor_cofactor(d, out);
  factor_cofactor(n / d, out);
}

}  // namespace

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

unsigned long mod_floor(const Integer& n, unsigned long m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

bool fits_int64(const Integer& n) { return mpz_fits_slong_p(n.get_mpz_t()); }
bool fits_uint64(const Integer& n) { return sgn(n) >= 0 && mpz_fits_ulong_p(n.get_mpz_t()); }
std::uint64_t to_uint64(const Integer& n) { return n.get_ui(); }
Integer from_uint64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
Integer from_int64(std::int64_t v) { return Integer(static_cast<long>(v)); }
std::int64_t to_int64(const Integer& n) { return n.get_si(); }

static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long assumed for GMP conversions");

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // These twelve bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_uint64(n)) return is_prime_u64(to_uint64(n));
  for (unsigned long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  std::mt19937_64 rng(0x5eed'c0de'0001ULL);
  gmp_randclass bases(gmp_randinit_default);
  bases.seed(static_cast<unsigned long>(rng()));
  const Integer span = n - 3;
  for (int round = 0; round < kBigMillerRabinRounds; ++round) {
    const Integer a = bases.get_z_range(span) + 2;
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

unsigned vp(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("vp: valuation of 0 is infinite");
  if (!is_prime(p)) throw std::invalid_argument("vp: " + p.get_str() + " is not prime");
  Integer m = abs(n);
  return static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

Factorization factor(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factor: argument must be positive");
  std::map<Integer, unsigned> found;
  if (fits_uint64(n)) {
    u64 m = to_uint64(n);
    for (std::uint32_t p : small_primes()) {
      if (u64{p} * p > m) break;
      if (m % p) continue;
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      found.emplace(Integer(p), e);
    }
    factor_cofactor(from_uint64(m), found);
  } else {
    Integer m = n;
    for (std::uint32_t p : small_primes()) {
      if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
      const Integer prime(p);
      const auto e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
      found.emplace(prime, static_cast<unsigned>(e));
    }
    factor_cofactor(m, found);
  }
  std::vector<PrimePower> factors;
  factors.reserve(found.size());
  for (auto& [p, e] : found) factors.push_back({p, e});
  return Factorization::from_factors(std::move(factors));
}

std::optional<Integer> cube_root_exact(const Integer& n) {
  if (n < 1) throw std::invalid_argument("cube_root_exact: argument must be positive");
  Integer r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  return r;
}

Factorization Factorization::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  Factorization out;
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (!is_prime(f.prime))
      throw std::invalid_argument("Factorization: " + f.prime.get_str() + " is not prime");
    if (!out.factors_.empty() && out.factors_.back().prime == f.prime) {
      out.factors_.back().exponent += f.exponent;
    } else {
      out.factors_.push_back(std::move(f));
    }
  }
  for (const auto& f : out.factors_) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out.value_ *= pe;
  }
  return out;
}

Factorization Factorization::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<PrimePower> factors;
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const auto caret = token.find('^');
    PrimePower f;
    try {
      if (caret == std::string::npos) {
        f = {Integer(token), 1};
      } else {
        f = {Integer(token.substr(0, caret)),
             static_cast<unsigned>(std::stoul(token.substr(caret + 1)))};
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("Factorization: cannot parse '" + token + "'");
    }
    factors.push_back(std::move(f));
  }
  return from_factors(std::move(factors));
}

unsigned Factorization::exponent_of(const Integer& p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, const Integer& q) { return f.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

std::vector<std::string> Factorization::to_strings() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime.get_str() + "^" + std::to_string(f.exponent));
  return out;
}

std::string Factorization::to_string() const {
  std::string out;
  for (const auto& s : to_strings()) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace simplecubic
