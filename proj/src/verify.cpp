#include "simplecubic/verify.hpp"

#include <fstream>
#include <sstream>

#include "simplecubic/fixtures_data.hpp"

namespace simplecubic {

// ---------------------------------------------------------------------------
// VerificationReport

void VerificationReport::record(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back(
        {other.subject_.empty() ? c.name : other.subject_ + ": " + c.name, c.passed, c.detail});
  }
}

bool VerificationReport::overall() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.passed ? 0 : 1;
  return n;
}

std::string VerificationReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks_) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Field identities

VerificationReport check_shanks_relations(const Integer& t) {
  VerificationReport report("t=" + t.get_str());
  const auto one = FieldElement::rational(t, Rational(1));
  const auto zero = FieldElement::rational(t, Rational(0));
  const auto theta = FieldElement::theta(t);
  const auto s1 = sigma(theta);
  const auto s2 = sigma(s1);
  const auto f = CubicPolynomial::shanks(t);
  const Integer d = t * t + 3 * t + 9;

  auto expect_equal = [&](std::string name, const FieldElement& lhs, const FieldElement& rhs) {
    const bool ok = lhs == rhs;
    report.record(std::move(name), ok, ok ? "" : lhs.to_string() + " != " + rhs.to_string());
  };
  auto expect_rational = [&](std::string name, const Rational& got, const Rational& want) {
    report.record(std::move(name), got == want, "got " + got.get_str() + ", want " + want.get_str());
  };

  expect_equal("f_t(theta) = 0", evaluate(f, theta), zero);
  expect_equal("f_t(sigma(theta)) = 0", evaluate(f, s1), zero);
  expect_equal("sigma(theta) * theta = -(1 + theta)", s1 * theta, -(one + theta));
  expect_equal("sigma^2(theta) * (1 + theta) = -1", s2 * (one + theta), -one);
  expect_equal("1 + theta + theta*sigma(theta) = 0", one + theta + theta * s1, zero);
  expect_equal("sigma^3(theta) = theta", sigma(s2), theta);
  report.record("sigma(theta) != theta", s1 != theta);
  expect_rational("N(theta) = 1", norm(theta), Rational(1));
  expect_rational("det(M_theta) = 1", matrix_norm(theta), Rational(1));
  expect_rational("Tr(theta) = t", trace(theta), Rational(t));
  expect_rational("tr(M_theta) = t", matrix_trace(theta), Rational(t));
  expect_equal("(sigma(theta) - sigma^2(theta)) / (theta - sigma(theta)) = sigma^2(theta)",
               (s1 - s2) / (theta - s1), s2);
  expect_rational("N(theta - sigma(theta)) = Delta", norm(theta - s1), Rational(d));
  expect_rational("d(theta) = Delta^2", element_discriminant(theta), Rational(d * d));
  report.record("minimal polynomial of theta is f_t", minimal_polynomial(theta) == f,
                minimal_polynomial(theta).to_string());
  return report;
}

VerificationReport check_certificate(const PibCertificate& cert, const Integer& conductor) {
  VerificationReport report("certificate t=" + cert.witness_t.get_str());
  const Integer& t = cert.witness_t;
  const FieldElement& gamma = cert.gamma;

  const FieldElement rebuilt(t, {-cert.a, 1, 0}, cert.m);
  report.record("gamma = (theta - a)/m", gamma == rebuilt, gamma.to_string());
  report.record("0 <= a < m", cert.a >= 0 && cert.a < cert.m,
                "a=" + cert.a.get_str() + " m=" + cert.m.get_str());

  const CubicPolynomial min_poly = minimal_polynomial(gamma);
  report.record("minimal polynomial is a monic integer cubic",
                min_poly.degree() == 3 && min_poly.coefficient(3) == 1 &&
                    min_poly.has_integer_coefficients(),
                min_poly.to_string());
  report.record("recorded minimal polynomial matches", min_poly == cert.min_poly,
                cert.min_poly.to_string());
  report.record("minimal polynomial vanishes at gamma",
                evaluate(min_poly, gamma) == FieldElement::rational(t, Rational(0)));
  report.record("gamma is integral", is_integral(gamma));

  const Rational diff_norm = norm(gamma - sigma(gamma));
  report.record("|N(gamma - sigma(gamma))| = c", abs(diff_norm) == Rational(conductor),
                "N = " + diff_norm.get_str() + ", c = " + conductor.get_str());
  const Rational disc = element_discriminant(gamma);
  const Integer c2 = conductor * conductor;
  report.record("d(gamma) = c^2", disc == Rational(c2),
                "d = " + disc.get_str() + ", c^2 = " + c2.get_str());
  report.record("d(gamma) = disc(minimal polynomial)", min_poly.discriminant() == disc,
                min_poly.discriminant().get_str());
  report.record("recorded discriminant matches", Rational(cert.disc) == disc,
                cert.disc.get_str());
  return report;
}

VerificationReport check_certificate(const PibCertificate& cert) {
  return check_certificate(cert, cert.conductor);
}

VerificationReport check_negative(const Integer& t) {
  VerificationReport report("negative t=" + t.get_str());
  for (const auto& member : coincidence_class(t).members) {
    const ConductorData data = conductor(member);
    const Integer& d = data.delta.value();
    const Integer& c = data.conductor.value();
    const bool divides = mpz_divisible_p(d.get_mpz_t(), c.get_mpz_t()) != 0;
    report.record("c | Delta at t'=" + member.get_str(), divides,
                  "Delta=" + d.get_str() + " c=" + c.get_str());
    if (!divides) continue;
    const Integer ratio = d / c;
    report.record("Delta/c not a cube at t'=" + member.get_str(),
                  !cube_root_exact(ratio).has_value(), "Delta/c = " + ratio.get_str());
  }
  return report;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::string join_parameters(const std::vector<Integer>& ts) {
  std::string out;
  for (const auto& t : ts) {
    if (!out.empty()) out += ',';
    out += t.get_str();
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename Fn>
void for_each_data_line(std::string_view text, Fn&& fn) {
  for (const auto& raw : split(text, '\n')) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    fn(line);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void compare_rows(VerificationReport& report, const std::vector<TableRow>& computed,
                  const std::vector<TableRow>& expected) {
  report.record("row count", computed.size() == expected.size(),
                std::to_string(computed.size()) + " computed, " +
                    std::to_string(expected.size()) + " expected");
  const std::size_t n = std::max(computed.size(), expected.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string got = i < computed.size() ? format_table_row(computed[i]) : "<missing>";
    const std::string want = i < expected.size() ? format_table_row(expected[i]) : "<missing>";
    const std::string label =
        "row t=" + (i < expected.size() ? expected[i].t : computed[i].t).get_str();
    report.record(label, got == want, got == want ? got : "got " + got + ", want " + want);
  }
}

}  // namespace

std::string format_table_row(const TableRow& row) {
  return row.t.get_str() + "|" + row.delta.to_string() + "|" + row.conductor.to_string() + "|" +
         std::string(to_string(row.case_label)) + "|" + join_parameters(row.class_members);
}

TableRow parse_table_row(std::string_view line) {
  const auto fields = split(line, '|');
  if (fields.size() != 5)
    throw std::invalid_argument("fixture row needs 5 fields: '" + std::string(line) + "'");
  TableRow row;
  row.t = Integer(trim(fields[0]));
  row.delta = Factorization::parse(fields[1]);
  row.conductor = Factorization::parse(fields[2]);
  row.case_label = case_label_from_string(trim(fields[3]));
  const std::string members = trim(fields[4]);
  if (!members.empty()) {
    for (const auto& m : split(members, ',')) row.class_members.emplace_back(trim(m));
  }
  return row;
}

std::vector<TableRow> parse_table(std::string_view text) {
  std::vector<TableRow> rows;
  for_each_data_line(text, [&](const std::string& line) { rows.push_back(parse_table_row(line)); });
  return rows;
}

std::vector<Integer> parse_parameter_list(std::string_view text) {
  std::vector<Integer> out;
  for_each_data_line(text, [&](const std::string& line) {
    for (const auto& tok : split(line, ',')) {
      const std::string v = trim(tok);
      if (!v.empty()) out.emplace_back(v);
    }
  });
  return out;
}

Fixtures Fixtures::embedded() {
  return Fixtures{parse_table(fixtures::kTable1), parse_parameter_list(fixtures::kTable1CaseC),
                  parse_table(fixtures::kTable2)};
}

Fixtures Fixtures::load(const std::filesystem::path& dir) {
  return Fixtures{parse_table(read_file(dir / "table1.txt")),
                  parse_parameter_list(read_file(dir / "table1_case_c.txt")),
                  parse_table(read_file(dir / "table2.txt"))};
}

// ---------------------------------------------------------------------------
// Regeneration

TableRow compute_row(const Integer& t) {
  const ConductorData data = conductor(t);
  const MonogenityVerdict v = field_monogenic(data);
  return TableRow{t, data.delta, data.conductor, v.case_label, v.coincidence.others(t)};
}

std::vector<TableRow> regenerate_table1() {
  std::vector<TableRow> rows;
  for (long t = kTable1First; t <= kTable1Last; ++t) rows.push_back(compute_row(Integer(t)));
  return rows;
}

std::vector<Integer> regenerate_case_c_list() {
  std::vector<Integer> out;
  for (long t = -1; t <= kCaseCScanLast; ++t) {
    if (!field_monogenic(Integer(t)).field_monogenic) out.emplace_back(t);
  }
  return out;
}

std::vector<TableRow> regenerate_table2() {
  std::vector<TableRow> rows;
  auto consider = [&](const Integer& t) {
    const ConductorData data = conductor(t);
    const MonogenityVerdict v = field_monogenic(data);
    if (v.z_theta_maximal || !v.ck_principal) return;
    rows.push_back(TableRow{t, data.delta, data.conductor, v.case_label, v.coincidence.others(t)});
  };
  for (long t = -1; t <= kTable2ScanLast; ++t) consider(Integer(t));
  for (long t : kTable2LargeRows) consider(Integer(t));
  return rows;
}

VerificationReport reproduce_table1(const Fixtures& fixtures) {
  VerificationReport report("table 1");
  VerificationReport left("left panel");
  compare_rows(left, regenerate_table1(), fixtures.table1);
  report.merge(left);

  VerificationReport right("right panel");
  const auto computed = regenerate_case_c_list();
  const auto& expected = fixtures.table1_case_c;
  right.record("case (c) count", computed.size() == expected.size(),
               std::to_string(computed.size()) + " computed, " +
                   std::to_string(expected.size()) + " expected");
  right.record("case (c) list", computed == expected,
               computed == expected ? "first " + computed.front().get_str() + ", last " +
                                          computed.back().get_str()
                                    : "got " + join_parameters(computed));
  report.merge(right);
  return report;
}

VerificationReport reproduce_table2(const Fixtures& fixtures) {
  VerificationReport report("table 2");
  compare_rows(report, regenerate_table2(), fixtures.table2);
  return report;
}

VerificationReport reproduce_tables(const Fixtures& fixtures) {
  VerificationReport report("tables");
  report.merge(reproduce_table1(fixtures));
  report.merge(reproduce_table2(fixtures));
  return report;
}

}  // namespace simplecubic
