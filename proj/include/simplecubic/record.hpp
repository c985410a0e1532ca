#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simplecubic/monogenity.hpp"
#include "simplecubic/verify.hpp"

namespace simplecubic {

struct VerificationSummary {
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

/// Everything reported for one parameter, flattened for output.
struct AnalysisRecord {
  Integer t;
  Integer normalized_t;
  Factorization delta;
  Factorization conductor;
  ThreeAdicCase three_case = ThreeAdicCase::kZero;
  CaseLabel case_label = CaseLabel::kC;
  bool z_theta_maximal = false;
  bool parameter_monogenic = false;
  bool field_monogenic = false;
  bool ck_principal = false;
  std::optional<Integer> witness_t;
  std::optional<Integer> pib_a;
  std::optional<Integer> pib_m;
  std::optional<VerificationSummary> verification;

  friend bool operator==(const AnalysisRecord&, const AnalysisRecord&) = default;
};

struct AnalyzeOptions {
  bool verify = false;
  DecisionMode mode = DecisionMode::kChecked;
};

/// Normalizes t, decides monogenity and principality and, with
/// options.verify, runs the field-identity, certificate and negative checks.
/// The full report is written to *report when given.
AnalysisRecord analyze(const Integer& t, const AnalyzeOptions& options = {},
                       VerificationReport* report = nullptr);

/// Field order is fixed; integers that do not fit in 64 bits are written as
/// decimal strings.
nlohmann::ordered_json to_json(const AnalysisRecord& record);
AnalysisRecord record_from_json(const nlohmann::ordered_json& j);

/// t,delta,delta_factors,conductor,conductor_factors,case,ck_principal,
/// monogenic,witness_t,pib_a,pib_m
std::string csv_header();
std::string to_csv_row(const AnalysisRecord& record);
/// Recomputes the columns the CSV omits (normalized_t, three_case,
/// z_theta_maximal, parameter_monogenic); verification is left empty.
AnalysisRecord record_from_csv_row(const std::string& line);

/// Multi-line human readable form.
std::string to_text(const AnalysisRecord& record);
/// Single-line summary used by text-format scans.
std::string to_text_line(const AnalysisRecord& record);

}  // namespace simplecubic
