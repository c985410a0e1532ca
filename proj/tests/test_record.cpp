#include <doctest.h>

#include <random>

#include "simplecubic/scan.hpp"

using namespace simplecubic;

TEST_CASE("analyze normalizes the parameter") {
  const auto r = analyze(-4);
  CHECK(r.t == -4);
  CHECK(r.normalized_t == 1);
  CHECK(r.delta.value() == 13);
  const auto r1 = analyze(1);
  CHECK(r.case_label == r1.case_label);
  CHECK(r.pib_m == r1.pib_m);
}

TEST_CASE("analyze with verification") {
  VerificationReport report;
  const auto r = analyze(21, {true, DecisionMode::kChecked}, &report);
  REQUIRE(r.verification.has_value());
  CHECK(r.verification->passed());
  CHECK(r.verification->checks == report.checks().size());
  CHECK(r.case_label == CaseLabel::kC);

  const auto r12 = analyze(12, {true, DecisionMode::kChecked});
  CHECK(r12.pib_a == Integer(1));
  CHECK(r12.pib_m == Integer(3));
  CHECK(r12.verification->passed());
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(11);
  std::vector<Integer> ts{-4, -1, 0, 3, 12, 21, 740, 101471, 18128865,
                          Integer("-3000000000000000000000")};
  for (int i = 0; i < 40; ++i) ts.push_back(from_uint64(rng() % 1000000));
  for (const auto& t : ts) {
    CAPTURE(t.get_str());
    const auto r = analyze(t, {(t % 3) == 0, DecisionMode::kChecked});
    const auto j = to_json(r);
    CHECK(record_from_json(nlohmann::ordered_json::parse(j.dump())) == r);
  }
}

TEST_CASE("JSON uses strings only beyond 64 bits") {
  const auto small = to_json(analyze(12));
  CHECK(small["delta"].is_number_integer());
  const auto huge = to_json(analyze(Integer("-3000000000000000000000")));
  CHECK(huge["t"].is_string());
  CHECK(huge["delta"].is_string());
  CHECK(huge["normalized_t"] == "2999999999999999999997");
}

TEST_CASE("CSV") {
  CHECK(csv_header() ==
        "t,delta,delta_factors,conductor,conductor_factors,case,ck_principal,monogenic,witness_t,"
        "pib_a,pib_m");
  CHECK(to_csv_row(analyze(12)) == "12,189,3^3 7^1,7,7^1,a,true,true,12,1,3");
  CHECK(to_csv_row(analyze(21)) == "21,513,3^3 19^1,171,3^2 19^1,c,false,false,,,");
  for (long t = -1; t <= 300; ++t) {
    const auto r = analyze(t);
    CHECK(record_from_csv_row(to_csv_row(r)) == r);
  }
  CHECK_THROWS(record_from_csv_row("1,2,3"));
}

TEST_CASE("text rendering") {
  const auto text = to_text(analyze(12));
  CHECK(text.find("(theta_12 - 1)/3") != std::string::npos);
  CHECK(to_text_line(analyze(21)).rfind("t=21 ", 0) == 0);
}

TEST_CASE("scan emits ascending t independent of job count") {
  ScanOptions options;
  options.lo = -1;
  options.hi = 2000;
  options.jobs = 1;
  const auto serial = scan_collect(options);
  REQUIRE(serial.size() == 2002);
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].t == Integer(long(i) - 1));
  for (unsigned jobs : {2u, 3u, 8u}) {
    options.jobs = jobs;
    CHECK(scan_collect(options) == serial);
  }
}

TEST_CASE("scan filtering") {
  ScanOptions options;
  options.lo = -1;
  options.hi = 2000;
  options.jobs = 4;
  options.keep = [](const AnalysisRecord& r) { return r.case_label == CaseLabel::kC; };
  const auto c = scan_collect(options);
  CHECK(c.size() == 253);
  CHECK(c.front().t == 21);
  CHECK(c.back().t == 1992);
}

TEST_CASE("scan rejects bad ranges and propagates worker errors") {
  ScanOptions options;
  options.lo = 5;
  options.hi = 4;
  CHECK_THROWS_AS(scan_collect(options), std::invalid_argument);
  options.lo = -2;
  options.hi = 4;
  CHECK_THROWS_AS(scan_collect(options), std::invalid_argument);

  options.lo = 0;
  options.hi = 5000;
  options.jobs = 3;
  options.keep = [](const AnalysisRecord& r) {
    if (r.t == 3001) throw std::runtime_error("boom");
    return true;
  };
  CHECK_THROWS_WITH(scan_collect(options), "boom");
}
