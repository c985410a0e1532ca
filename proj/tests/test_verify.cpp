#include <doctest.h>

#include "simplecubic/verify.hpp"

using namespace simplecubic;

TEST_CASE("check_shanks_relations") {
  for (long t : {0L, 1259L, 1000001L, -1L, -7L}) {
    const auto report = check_shanks_relations(t);
    CAPTURE(report.to_string());
    CHECK(report.overall());
    CHECK(report.checks().size() >= 10);
  }
}

TEST_CASE("check_certificate") {
  const auto c12 = power_integral_basis(12);
  const auto r12 = check_certificate(c12, 7);
  CAPTURE(r12.to_string());
  CHECK(r12.overall());
  CHECK(abs(norm(c12.gamma - sigma(c12.gamma))) == 7);

  const auto c0 = power_integral_basis(0);
  CHECK(c0.gamma == FieldElement::theta(0));
  CHECK(element_discriminant(c0.gamma) == 81);
  CHECK(check_certificate(c0).overall());

  const auto c740 = power_integral_basis(740);
  CHECK(check_certificate(c740, 1603).overall());
  CHECK(c740.disc == Integer(1603) * 1603);
}

TEST_CASE("check_certificate rejects a wrong conductor or a tampered basis") {
  const auto cert = power_integral_basis(54);
  CHECK_FALSE(check_certificate(cert, 27).overall());
  auto tampered = cert;
  tampered.gamma = FieldElement(54, {-3, 1, 0}, 7);  // (θ - 3)/7 is not integral
  tampered.a = 3;
  const auto report = check_certificate(tampered);
  CHECK_FALSE(report.overall());
  bool integral_failed = false;
  for (const auto& c : report.checks())
    if (c.name == "gamma is integral") integral_failed = !c.passed;
  CHECK(integral_failed);
}

TEST_CASE("check_negative") {
  const auto r21 = check_negative(21);
  CHECK(r21.overall());
  CHECK(r21.checks().back().detail == "Delta/c = 3");
  CHECK(check_negative(101471).overall());
  CHECK(check_negative(30).overall());
  // A monogenic parameter fails the negative check.
  CHECK_FALSE(check_negative(12).overall());
}

TEST_CASE("VerificationReport aggregates") {
  VerificationReport r("x");
  CHECK(r.overall());
  r.record("a", true);
  r.record("b", false, "why");
  CHECK_FALSE(r.overall());
  CHECK(r.failures() == 1);
  CHECK(r.to_string() == "PASS a\nFAIL b: why\n");
  VerificationReport outer;
  outer.merge(r);
  CHECK(outer.checks()[1].name == "x: b");
}

TEST_CASE("fixture rows") {
  const auto row = parse_table_row("12|3^3 7^1|7^1|a|-1,5,1259");
  CHECK(row.t == 12);
  CHECK(row.delta.value() == 189);
  CHECK(row.conductor.value() == 7);
  CHECK(row.case_label == CaseLabel::kA);
  CHECK(row.class_members == std::vector<Integer>{-1, 5, 1259});
  CHECK(format_table_row(row) == "12|3^3 7^1|7^1|a|-1,5,1259");
  CHECK(parse_table_row("4|37^1|37^1|a|").class_members.empty());
  CHECK_THROWS(parse_table_row("4|37^1|37^1|a"));
  CHECK_THROWS(parse_table_row("4|37^1|37^1|d|"));
  CHECK(compute_row(12) == row);
}

TEST_CASE("embedded fixtures") {
  const auto f = Fixtures::embedded();
  CHECK(f.table1.size() == 32);
  CHECK(f.table1_case_c.size() == 253);
  CHECK(f.table1_case_c.front() == 21);
  CHECK(f.table1_case_c.back() == 1992);
  CHECK(f.table2.size() == 36);
  CHECK(format_table_row(f.table1[28]) == "27|3^2 7^1 13^1|3^2 7^1 13^1|a|");
  CHECK(format_table_row(f.table2.back()) ==
        "18128865|3^3 7^3 13^2 43^2 337^2|13^1 43^1 337^1|c|");
}

TEST_CASE("reproduce_tables matches the fixtures") {
  const auto report = reproduce_tables();
  CAPTURE(report.to_string());
  CHECK(report.overall());
}

TEST_CASE("reproduce_tables reports a tampered row") {
  auto f = Fixtures::embedded();
  f.table1[5].case_label = CaseLabel::kC;  // t = 4
  f.table2.pop_back();
  const auto r1 = reproduce_table1(f);
  CHECK(r1.failures() == 1);
  const auto r2 = reproduce_table2(f);
  CHECK_FALSE(r2.overall());
}
