#include "simplecubic/monogenity.hpp"

#include <algorithm>
#include <array>

namespace simplecubic {

namespace {

// Fields with more than one Shanks parameter t >= -1.
const std::array<std::vector<long>, 4> kCoincidences{{
    {-1, 5, 12, 1259},
    {0, 3, 54},
    {1, 66},
    {2, 2389},
}};

bool exponent_is(unsigned e, unsigned residue) { return e % 3 == residue; }

bool is_cube(const Integer& n) { return n >= 1 && cube_root_exact(n).has_value(); }

}  // namespace

std::vector<Integer> CoincidenceClass::others(const Integer& t) const {
  std::vector<Integer> out;
  for (const auto& m : members) {
    if (m != t) out.push_back(m);
  }
  return out;
}

CoincidenceClass coincidence_class(const Integer& t) {
  if (fits_int64(t)) {
    const long v = t.get_si();
    for (const auto& cls : kCoincidences) {
      if (std::find(cls.begin(), cls.end(), v) != cls.end()) {
        CoincidenceClass out;
        for (long m : cls) out.members.emplace_back(m);
        return out;
      }
    }
  }
  return CoincidenceClass{{t}};
}

bool is_cyclotomic_nine(const Integer& t) { return t == 0 || t == 3 || t == 54; }

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::kA: return "a";
    case CaseLabel::kB: return "b";
    case CaseLabel::kC: return "c";
  }
  return "?";
}

CaseLabel case_label_from_string(std::string_view s) {
  if (s == "a" || s == "A") return CaseLabel::kA;
  if (s == "b" || s == "B") return CaseLabel::kB;
  if (s == "c" || s == "C") return CaseLabel::kC;
  throw std::invalid_argument("unknown case label '" + std::string(s) + "'");
}

bool monogenic_param_valuation(const ConductorData& data) {
  if (data.three_case == ThreeAdicCase::kThreeRamified) return false;
  for (const auto& f : data.delta.factors()) {
    if (f.prime != 3 && exponent_is(f.exponent, 2)) return false;
  }
  return true;
}

bool monogenic_param_valuation(const Integer& t) { return monogenic_param_valuation(conductor(t)); }

bool monogenic_param_cube(const ConductorData& data) {
  const Integer& d = data.delta.value();
  const Integer& c = data.conductor.value();
  if (!mpz_divisible_p(d.get_mpz_t(), c.get_mpz_t())) return false;
  return is_cube(d / c);
}

bool monogenic_param_cube(const Integer& t) { return monogenic_param_cube(conductor(t)); }

bool ck_principal_valuation(const ConductorData& data) {
  if (is_cyclotomic_nine(data.t)) return true;
  const auto& cond = data.conductor;
  if (!three_divides_conductor(data.three_case)) {
    bool all_one = true, all_two = true;
    for (const auto& f : cond.factors()) {
      const unsigned e = data.delta.exponent_of(f.prime);
      all_one = all_one && exponent_is(e, 1);
      all_two = all_two && exponent_is(e, 2);
    }
    return all_one || all_two;
  }
  if (data.delta.exponent_of(Integer(3)) != 2) return false;
  for (const auto& f : cond.factors()) {
    if (f.prime != 3 && !exponent_is(data.delta.exponent_of(f.prime), 1)) return false;
  }
  return true;
}

bool ck_principal_cube(const ConductorData& data) {
  const Integer& d = data.delta.value();
  const Integer& c = data.conductor.value();
  if (!mpz_divisible_p(d.get_mpz_t(), c.get_mpz_t())) return false;
  return is_cube(d / c) || is_cube(d * d / c);
}

namespace {

bool principal(const ConductorData& data, DecisionMode mode) {
  const bool by_valuation = ck_principal_valuation(data);
  if (mode == DecisionMode::kChecked && !is_cyclotomic_nine(data.t) &&
      by_valuation != ck_principal_cube(data)) {
    throw InternalError("principality tests disagree at t = " + data.t.get_str());
  }
  return by_valuation;
}

bool parameter_passes(const ConductorData& data, DecisionMode mode) {
  const bool by_cube = monogenic_param_cube(data);
  if (mode == DecisionMode::kChecked && by_cube != monogenic_param_valuation(data)) {
    throw InternalError("valuation and cube monogenity tests disagree at t = " +
                        data.t.get_str());
  }
  return by_cube;
}

}  // namespace

bool ck_principal(const Integer& t, DecisionMode mode) { return principal(conductor(t), mode); }

PibCertificate certificate_at(const ConductorData& witness) {
  const Integer& t = witness.t;
  const Integer& d = witness.delta.value();
  const Integer& c = witness.conductor.value();
  const auto root = mpz_divisible_p(d.get_mpz_t(), c.get_mpz_t())
                        ? cube_root_exact(d / c)
                        : std::optional<Integer>{};
  if (!root) {
    throw std::domain_error("certificate_at: Δ/c is not a cube at t = " + t.get_str());
  }
  const Integer m = *root;
  Integer a;
  if (mod_floor(m, 3ul) == 0) {
    if (mod_floor(t, 3ul) != 0)
      throw InternalError("3 | m but 3 ∤ t at t = " + t.get_str());
    a = mod_floor(Integer(t / 3), m);
  } else if (m == 1) {
    a = 0;
  } else {
    Integer inv3;
    mpz_invert(inv3.get_mpz_t(), Integer(3).get_mpz_t(), m.get_mpz_t());
    a = mod_floor(Integer(t * inv3), m);
  }

  const FieldElement gamma(t, {-a, 1, 0}, m);
  CubicPolynomial min_poly = minimal_polynomial(gamma);
  if (!min_poly.has_integer_coefficients())
    throw InternalError("constructed basis element " + gamma.to_string() +
                        " is not integral at t = " + t.get_str());
  const Rational disc = element_discriminant(gamma);
  const Integer c2 = c * c;
  if (disc != Rational(c2) || min_poly.discriminant() != disc)
    throw InternalError("discriminant of " + gamma.to_string() + " is " + disc.get_str() +
                        ", expected " + c2.get_str());
  return PibCertificate{t, c, m, a, gamma, std::move(min_poly), c2};
}

PibCertificate power_integral_basis(const Integer& t) {
  const auto verdict = field_monogenic(t);
  if (!verdict.certificate)
    throw std::domain_error("power_integral_basis: K_" + t.get_str() + " is not monogenic");
  return *verdict.certificate;
}

MonogenityVerdict field_monogenic(const ConductorData& data, DecisionMode mode) {
  MonogenityVerdict v;
  v.t = data.t;
  v.coincidence = coincidence_class(data.t);
  v.parameter_monogenic = parameter_passes(data, mode);
  v.z_theta_maximal = data.z_theta_maximal();

  std::optional<ConductorData> witness;
  if (v.parameter_monogenic) {
    witness = data;
  } else {
    for (const auto& member : v.coincidence.members) {
      if (member == data.t) continue;
      ConductorData other = conductor(member);
      if (parameter_passes(other, mode)) {
        witness = std::move(other);
        break;
      }
    }
  }
  v.field_monogenic = witness.has_value();
  v.case_label = v.parameter_monogenic ? CaseLabel::kA
                 : v.field_monogenic   ? CaseLabel::kB
                                       : CaseLabel::kC;
  v.ck_principal = principal(data, mode);
  if (v.field_monogenic && !v.ck_principal)
    throw InternalError("monogenic field with non-principal conductor ideal at t = " +
                        data.t.get_str());
  if (witness) {
    v.witness_t = witness->t;
    v.certificate = certificate_at(*witness);
  }
  return v;
}

MonogenityVerdict field_monogenic(const Integer& t, DecisionMode mode) {
  return field_monogenic(conductor(t), mode);
}

}  // namespace simplecubic
