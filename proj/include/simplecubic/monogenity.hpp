#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "simplecubic/conductor.hpp"
#include "simplecubic/field.hpp"

namespace simplecubic {

/// A verdict contradicted by exact computation (for example two equivalent
/// criteria disagreeing, or a constructed basis failing to be integral).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parameters t >= -1 that define the same field. Apart from four listed
/// exceptions, K_t determines t.
struct CoincidenceClass {
  std::vector<Integer> members;  // ascending

  const Integer& representative() const { return members.front(); }
  bool is_singleton() const { return members.size() == 1; }
  /// Members other than t, ascending.
  std::vector<Integer> others(const Integer& t) const;
};

CoincidenceClass coincidence_class(const Integer& t);

/// True for the class {0, 3, 54}, the real cyclotomic field Q(ζ_9 + ζ_9^{-1}).
bool is_cyclotomic_nine(const Integer& t);

enum class CaseLabel { kA, kB, kC };
std::string_view to_string(CaseLabel c);  // "a", "b", "c"
CaseLabel case_label_from_string(std::string_view s);

struct PibCertificate {
  Integer witness_t;
  Integer conductor;
  Integer m;  // ∛(Δ/c) at witness_t
  Integer a;  // 0 <= a < m
  FieldElement gamma;  // (θ_{witness_t} - a) / m
  CubicPolynomial min_poly;
  Integer disc;
};

struct MonogenityVerdict {
  Integer t;
  bool parameter_monogenic = false;
  bool field_monogenic = false;
  CaseLabel case_label = CaseLabel::kC;
  /// Δ_t = c, so θ_t itself generates the ring of integers.
  bool z_theta_maximal = false;
  bool ck_principal = false;
  CoincidenceClass coincidence;
  std::optional<Integer> witness_t;
  std::optional<PibCertificate> certificate;
};

/// kChecked evaluates both equivalent monogenity tests and both principality
/// tests and throws InternalError on disagreement; kFast uses one of each.
enum class DecisionMode { kFast, kChecked };

/// t ≢ 3, 21 mod 27 and v_p(Δ) ≢ 2 mod 3 for every p ≠ 3.
bool monogenic_param_valuation(const ConductorData& data);
bool monogenic_param_valuation(const Integer& t);

/// Δ/c is a perfect cube.
bool monogenic_param_cube(const ConductorData& data);
bool monogenic_param_cube(const Integer& t);

/// Principality of the ambiguous ideal of norm c, from the valuations of Δ
/// on the primes dividing c. The class {0, 3, 54} is principal.
bool ck_principal_valuation(const ConductorData& data);
/// Equivalent cube test: Δ/c or Δ²/c is a perfect cube (valid off {0, 3, 54}).
bool ck_principal_cube(const ConductorData& data);
bool ck_principal(const Integer& t, DecisionMode mode = DecisionMode::kChecked);

/// Power integral basis (θ_w - a)/m at the witness parameter w of t's class.
/// Throws std::domain_error when the field is not monogenic, InternalError
/// when the constructed element fails integrality or the discriminant check.
PibCertificate power_integral_basis(const Integer& t);

/// Builds the certificate at a parameter that itself passes the cube test.
PibCertificate certificate_at(const ConductorData& witness);

MonogenityVerdict field_monogenic(const Integer& t, DecisionMode mode = DecisionMode::kChecked);
/// Same, reusing already computed conductor data for t.
MonogenityVerdict field_monogenic(const ConductorData& data,
                                  DecisionMode mode = DecisionMode::kChecked);

}  // namespace simplecubic
