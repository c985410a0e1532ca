#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simplecubic/monogenity.hpp"

namespace simplecubic {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a batch of exact checks. Failures are recorded, never thrown.
class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  void record(std::string name, bool passed, std::string detail = {});
  void merge(const VerificationReport& other);

  const std::string& subject() const noexcept { return subject_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool overall() const;
  std::size_t failures() const;

  /// One "PASS|FAIL name: detail" line per check.
  std::string to_string() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

/// Defining relations of θ_t and σ, checked by exact arithmetic in K_t.
/// Valid for any integer t.
VerificationReport check_shanks_relations(const Integer& t);

/// Verifies that cert.gamma generates the ring of integers: integral, with
/// element discriminant equal to conductor². Uses field arithmetic only.
VerificationReport check_certificate(const PibCertificate& cert, const Integer& conductor);
/// Uses the conductor recorded in the certificate.
VerificationReport check_certificate(const PibCertificate& cert);

/// Confirms that no member of t's coincidence class has Δ/c a perfect cube.
VerificationReport check_negative(const Integer& t);

// ---------------------------------------------------------------------------
// Golden tables.
//
// Fixture rows are plain text, one per line:
//
//   t|delta_factorization|conductor_factorization|case|class_members
//
// e.g. "12|3^3 7^1|7^1|a|-1,5,1259". Factorizations are space separated
// "p^e" terms in ascending p; class_members lists the other parameters of
// the same field, comma separated, possibly empty. The case-(c) list file
// holds one t per line. '#' starts a comment line.

struct TableRow {
  Integer t;
  Factorization delta;
  Factorization conductor;
  CaseLabel case_label = CaseLabel::kC;
  std::vector<Integer> class_members;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::string format_table_row(const TableRow& row);
TableRow parse_table_row(std::string_view line);
std::vector<TableRow> parse_table(std::string_view text);
std::vector<Integer> parse_parameter_list(std::string_view text);

struct Fixtures {
  std::vector<TableRow> table1;
  std::vector<Integer> table1_case_c;
  std::vector<TableRow> table2;

  /// Copies compiled into the library from data/.
  static Fixtures embedded();
  /// Reads table1.txt, table1_case_c.txt and table2.txt from dir.
  static Fixtures load(const std::filesystem::path& dir);
};

inline constexpr long kTable1First = -1;
inline constexpr long kTable1Last = 30;
inline constexpr long kCaseCScanLast = 2000;
inline constexpr long kTable2ScanLast = 740;
/// Principal, non-monogenic parameters quoted beyond the table 2 scan range.
inline const std::vector<long> kTable2LargeRows{101471, 182451, 18128865};

TableRow compute_row(const Integer& t);
std::vector<TableRow> regenerate_table1();
std::vector<Integer> regenerate_case_c_list();
std::vector<TableRow> regenerate_table2();

VerificationReport reproduce_table1(const Fixtures& fixtures);
VerificationReport reproduce_table2(const Fixtures& fixtures);
VerificationReport reproduce_tables(const Fixtures& fixtures = Fixtures::embedded());

}  // namespace simplecubic
