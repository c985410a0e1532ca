#pragma once

// Test-only oracles that recompute field quantities without going through
// FieldElement: naive polynomial arithmetic modulo f_t, Taylor-shifted
// minimal polynomials, and a floating-point real embedding.

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Poly = std::vector<mpq_class>;  // lowest degree first

inline Poly shanks(const mpz_class& t) { return {-1, mpq_class(-(t + 3)), mpq_class(-t), 1}; }

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// Remainder of a modulo the monic cubic f, by schoolbook long division.
inline Poly reduce(Poly a, const Poly& f) {
  while (a.size() > 3) {
    const mpq_class lead = a.back();
    const std::size_t shift = a.size() - 4;
    for (std::size_t i = 0; i < 4; ++i) a[shift + i] -= lead * f[i];
    a.pop_back();
  }
  a.resize(3, 0);
  return a;
}

/// Evaluates p(q) modulo f where q is a residue (element of Q[x]/f).
inline Poly compose_mod(const Poly& p, const Poly& q, const Poly& f) {
  Poly acc{0};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = reduce(multiply(acc, q), f);
    acc[0] += p[i];
  }
  return reduce(acc, f);
}

/// Coefficients (low first) of f_t(m x + a) / m³, the monic minimal
/// polynomial of (θ - a)/m, by binomial expansion.
inline Poly shifted_minpoly(const mpz_class& t, const mpz_class& a, const mpz_class& m) {
  const Poly f = shanks(t);
  Poly out(4, 0);
  // (m x + a)^k = Σ_j C(k, j) m^j a^(k-j) x^j
  for (int k = 0; k <= 3; ++k) {
    for (int j = 0; j <= k; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      mpz_class mj, akj;
      mpz_pow_ui(mj.get_mpz_t(), m.get_mpz_t(), j);
      mpz_pow_ui(akj.get_mpz_t(), a.get_mpz_t(), k - j);
      out[j] += f[k] * mpq_class(binom * mj * akj);
    }
  }
  const mpq_class m3 = mpq_class(m * m * m);
  for (auto& c : out) c /= m3;
  return out;
}

/// Discriminant of the monic cubic x³ + b x² + c x + d (low-first input).
inline mpq_class cubic_discriminant(const Poly& p) {
  const mpq_class& d = p[0];
  const mpq_class& c = p[1];
  const mpq_class& b = p[2];
  return b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
}

/// The three real roots of f_t, via the trigonometric form of the depressed
/// cubic (f_t is totally real).
inline std::array<long double, 3> real_roots(long double t) {
  const long double b = -t, c = -(t + 3), d = -1;
  const long double p = c - b * b / 3;
  const long double q = 2 * b * b * b / 27 - b * c / 3 + d;
  const long double r = 2 * std::sqrt(-p / 3);
  const long double phi = std::acos(3 * q / (p * r)) / 3;
  std::array<long double, 3> out;
  for (int k = 0; k < 3; ++k)
    out[k] = r * std::cos(phi - 2 * std::numbers::pi_v<long double> * k / 3) - b / 3;
  return out;
}

/// Value of (c0 + c1 x + c2 x²)/den at a real root.
inline long double embed(const std::array<mpz_class, 3>& num, const mpz_class& den, long double x) {
  return (num[0].get_d() + num[1].get_d() * x + num[2].get_d() * x * x) / den.get_d();
}

}  // namespace oracle
