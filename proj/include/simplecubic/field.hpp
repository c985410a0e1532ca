#pragma once

#include <array>
#include <string>
#include <vector>

#include "simplecubic/arith.hpp"

namespace simplecubic {

/// Maps any integer parameter to the representative t >= -1 defining the
/// same field (K_t = K_{-(t+3)}).
Integer reduce_param(const Integer& t);

/// Monic polynomial with rational coefficients, stored lowest degree first.
/// Minimal polynomials are cubic for primitive elements and linear for
/// rational ones; characteristic polynomials are always cubic.
class CubicPolynomial {
 public:
  explicit CubicPolynomial(std::vector<Rational> coefficients);

  /// x^3 + a2 x^2 + a1 x + a0.
  static CubicPolynomial monic(Rational a2, Rational a1, Rational a0);
  /// The Shanks polynomial x^3 - t x^2 - (t+3) x - 1.
  static CubicPolynomial shanks(const Integer& t);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const Rational& coefficient(int i) const { return coefficients_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  bool has_integer_coefficients() const;
  /// Polynomial discriminant; defined for degree 1 (as 1) and degree 3.
  Rational discriminant() const;

  std::string to_string() const;

  friend bool operator==(const CubicPolynomial&, const CubicPolynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Element (c0 + c1 θ + c2 θ²) / den of K_t = Q(θ), θ a root of the Shanks
/// polynomial f_t. Stored in lowest terms with den > 0.
class FieldElement {
 public:
  FieldElement(Integer t, std::array<Integer, 3> num, Integer den = 1);

  static FieldElement theta(const Integer& t);
  static FieldElement rational(const Integer& t, const Rational& q);

  const Integer& t() const noexcept { return t_; }
  const std::array<Integer, 3>& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  /// Coordinate i in the basis {1, θ, θ²}.
  Rational coordinate(int i) const;

  bool is_zero() const { return num_[0] == 0 && num_[1] == 0 && num_[2] == 0; }
  bool is_rational() const { return num_[1] == 0 && num_[2] == 0; }
  /// Only meaningful when is_rational().
  Rational as_rational() const { return Rational(num_[0], den_); }

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& y);
  FieldElement& operator-=(const FieldElement& y);
  FieldElement& operator*=(const FieldElement& y);
  FieldElement& operator/=(const FieldElement& y) { return *this *= y.inverse(); }

  friend FieldElement operator+(FieldElement x, const FieldElement& y) { return x += y; }
  friend FieldElement operator-(FieldElement x, const FieldElement& y) { return x -= y; }
  friend FieldElement operator*(FieldElement x, const FieldElement& y) { return x *= y; }
  friend FieldElement operator/(FieldElement x, const FieldElement& y) { return x /= y; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  std::string to_string() const;

 private:
  void normalize();
  void require_same_field(const FieldElement& y) const;

  Integer t_;
  std::array<Integer, 3> num_;
  Integer den_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement inv(const FieldElement& x);

/// σ(θ) = -θ² + tθ + (t+2), which equals -(1+θ)/θ.
FieldElement sigma_of_theta(const Integer& t);
FieldElement sigma(const FieldElement& x);

using RationalMatrix = std::array<std::array<Rational, 3>, 3>;

/// Matrix of y ↦ x·y in the basis {1, θ, θ²}; column j is x·θ^j.
RationalMatrix multiplication_matrix(const FieldElement& x);

/// x + σx + σ²x.
Rational trace(const FieldElement& x);
/// x · σx · σ²x.
Rational norm(const FieldElement& x);

/// Trace and determinant of multiplication_matrix(x); used to cross-check
/// the conjugate-based trace() and norm().
Rational matrix_trace(const FieldElement& x);
Rational matrix_norm(const FieldElement& x);

CubicPolynomial characteristic_polynomial(const FieldElement& x);
/// Linear (x - c) for a rational c, otherwise the cubic characteristic
/// polynomial (which is irreducible since K_t has no quadratic subfield).
CubicPolynomial minimal_polynomial(const FieldElement& x);

/// Evaluates p at x inside the field.
FieldElement evaluate(const CubicPolynomial& p, const FieldElement& x);

/// Algebraic integer test: characteristic polynomial in Z[x].
bool is_integral(const FieldElement& x);

/// N(x - σx)², the product of all differences of distinct conjugates.
Rational element_discriminant(const FieldElement& x);

}  // namespace simplecubic
