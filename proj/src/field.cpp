#include "simplecubic/field.hpp"

#include <sstream>
#include <stdexcept>

namespace simplecubic {

Integer reduce_param(const Integer& t) { return t >= -1 ? t : Integer(-(t + 3)); }

// ---------------------------------------------------------------------------
// CubicPolynomial

CubicPolynomial::CubicPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  for (auto& c : coefficients_) c.canonicalize();
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty()) throw std::invalid_argument("CubicPolynomial: no coefficients");
  if (degree() > 3) throw std::invalid_argument("CubicPolynomial: degree above 3");
}

CubicPolynomial CubicPolynomial::monic(Rational a2, Rational a1, Rational a0) {
  return CubicPolynomial({std::move(a0), std::move(a1), std::move(a2), Rational(1)});
}

CubicPolynomial CubicPolynomial::shanks(const Integer& t) {
  return monic(Rational(-t), Rational(-(t + 3)), Rational(-1));
}

bool CubicPolynomial::has_integer_coefficients() const {
  for (const auto& c : coefficients_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational CubicPolynomial::discriminant() const {
  if (degree() == 1) return Rational(1);
  if (degree() != 3) throw std::domain_error("discriminant: only degrees 1 and 3 are supported");
  const Rational& a = coefficients_[3];
  const Rational& b = coefficients_[2];
  const Rational& c = coefficients_[1];
  const Rational& d = coefficients_[0];
  Rational disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
                  4 * a * c * c * c - 27 * a * a * d * d;
  return disc;
}

std::string CubicPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Integer t, std::array<Integer, 3> num, Integer den)
    : t_(std::move(t)), num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("FieldElement: zero denominator");
  normalize();
}

FieldElement FieldElement::theta(const Integer& t) { return FieldElement(t, {0, 1, 0}); }

FieldElement FieldElement::rational(const Integer& t, const Rational& q) {
  return FieldElement(t, {q.get_num(), 0, 0}, q.get_den());
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) g = gcd(g, c);
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

void FieldElement::require_same_field(const FieldElement& y) const {
  if (t_ != y.t_)
    throw std::invalid_argument("FieldElement: parameters differ (" + t_.get_str() + " vs " +
                                y.t_.get_str() + ")");
}

Rational FieldElement::coordinate(int i) const {
  Rational q(num_.at(static_cast<std::size_t>(i)), den_);
  q.canonicalize();
  return q;
}

FieldElement& FieldElement::operator+=(const FieldElement& y) {
  require_same_field(y);
  for (std::size_t i = 0; i < 3; ++i) num_[i] = num_[i] * y.den_ + y.num_[i] * den_;
  den_ *= y.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& y) { return *this += -y; }

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

FieldElement& FieldElement::operator*=(const FieldElement& y) {
  require_same_field(y);
  const auto& a = num_;
  const auto& b = y.num_;
  const Integer d0 = a[0] * b[0];
  const Integer d1 = a[0] * b[1] + a[1] * b[0];
  const Integer d2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  const Integer d3 = a[1] * b[2] + a[2] * b[1];
  const Integer d4 = a[2] * b[2];
  // θ³ = tθ² + (t+3)θ + 1 and θ⁴ = (t²+t+3)θ² + (t²+3t+1)θ + t.
  const Integer& t = t_;
  const Integer t2 = t * t;
  std::array<Integer, 3> c{
      d0 + d3 + d4 * t,
      d1 + d3 * (t + 3) + d4 * (t2 + 3 * t + 1),
      d2 + d3 * t + d4 * (t2 + t + 3),
  };
  num_ = std::move(c);
  den_ *= y.den_;
  normalize();
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  // Solve M·y = e0 with M the multiplication matrix of the numerator, via
  // its adjugate: y = adj(M)·e0 / det(M), then scale back by den.
  const FieldElement numerator(t_, num_);
  const FieldElement col1 = numerator * theta(t_);
  const FieldElement col2 = col1 * theta(t_);
  const std::array<std::array<Integer, 3>, 3> m{{
      {numerator.num_[0], col1.num_[0], col2.num_[0]},
      {numerator.num_[1], col1.num_[1], col2.num_[1]},
      {numerator.num_[2], col1.num_[2], col2.num_[2]},
  }};
  // col1/col2 are integral multiples of an integral numerator, so den == 1.
  const Integer det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // First column of the adjugate (cofactors of the first row, transposed).
  std::array<Integer, 3> adj0{
      m[1][1] * m[2][2] - m[1][2] * m[2][1],
      -(m[1][0] * m[2][2] - m[1][2] * m[2][0]),
      m[1][0] * m[2][1] - m[1][1] * m[2][0],
  };
  for (auto& c : adj0) c *= den_;
  return FieldElement(t_, std::move(adj0), det);
}

std::string FieldElement::to_string() const {
  std::ostringstream out;
  const bool wrap = den_ != 1;
  if (wrap) out << "(";
  bool first = true;
  const char* basis[] = {"", "θ", "θ²"};
  for (std::size_t i = 0; i < 3; ++i) {
    const Integer& c = num_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    out << basis[i];
    first = false;
  }
  if (first) out << "0";
  if (wrap) out << ")/" << den_.get_str();
  return out.str();
}

FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement sub(const FieldElement& x, const FieldElement& y) { return x - y; }
FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement inv(const FieldElement& x) { return x.inverse(); }

// ---------------------------------------------------------------------------
// Galois action, trace, norm

FieldElement sigma_of_theta(const Integer& t) { return FieldElement(t, {t + 2, t, -1}); }

FieldElement sigma(const FieldElement& x) {
  const FieldElement s1 = sigma_of_theta(x.t());
  const FieldElement s2 = s1 * s1;
  const auto& c = x.num();
  std::array<Integer, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = c[1] * s1.num()[i] + c[2] * s2.num()[i];
  out[0] += c[0];
  return FieldElement(x.t(), std::move(out), x.den());
}

namespace {

Rational expect_rational(const FieldElement& x, const char* what) {
  if (!x.is_rational())
    throw std::logic_error(std::string(what) + " of conjugates is not rational: " + x.to_string());
  return x.as_rational();
}

Rational det3(const RationalMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

Rational trace(const FieldElement& x) {
  const FieldElement s = sigma(x);
  return expect_rational(x + s + sigma(s), "sum");
}

Rational norm(const FieldElement& x) {
  const FieldElement s = sigma(x);
  return expect_rational(x * s * sigma(s), "product");
}

RationalMatrix multiplication_matrix(const FieldElement& x) {
  RationalMatrix m;
  FieldElement column = x;
  const FieldElement theta = FieldElement::theta(x.t());
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) m[i][j] = column.coordinate(static_cast<int>(i));
    if (j < 2) column *= theta;
  }
  return m;
}

Rational matrix_trace(const FieldElement& x) {
  const auto m = multiplication_matrix(x);
  return m[0][0] + m[1][1] + m[2][2];
}

Rational matrix_norm(const FieldElement& x) { return det3(multiplication_matrix(x)); }

CubicPolynomial characteristic_polynomial(const FieldElement& x) {
  const auto m = multiplication_matrix(x);
  const Rational tr = m[0][0] + m[1][1] + m[2][2];
  const Rational minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
                          (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                          (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  return CubicPolynomial::monic(-tr, minors, -det3(m));
}

CubicPolynomial minimal_polynomial(const FieldElement& x) {
  if (x.is_rational()) return CubicPolynomial({-x.as_rational(), Rational(1)});
  return characteristic_polynomial(x);
}

FieldElement evaluate(const CubicPolynomial& p, const FieldElement& x) {
  FieldElement acc = FieldElement::rational(x.t(), Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * x + FieldElement::rational(x.t(), p.coefficient(i));
  }
  return acc;
}

bool is_integral(const FieldElement& x) {
  return characteristic_polynomial(x).has_integer_coefficients();
}

Rational element_discriminant(const FieldElement& x) {
  const Rational n = norm(x - sigma(x));
  return n * n;
}

}  // namespace simplecubic
