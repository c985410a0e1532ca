// Command-line front end: per-parameter analysis, range scans and golden
// table reproduction for the simplest cubic fields K_t.

#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simplecubic/scan.hpp"

namespace {

using namespace simplecubic;

enum ExitCode : int { kOk = 0, kUsage = 1, kVerificationFailed = 2, kInternal = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& s) {
  static const std::regex pattern(R"(^[+-]?[0-9]+$)");
  if (!std::regex_match(s, pattern)) throw UsageError("not an integer: '" + s + "'");
  return Integer(s.front() == '+' ? s.substr(1) : s);
}

struct Filters {
  std::set<CaseLabel> cases;
  std::vector<std::string> properties;

  bool keep(const AnalysisRecord& r) const {
    if (!cases.empty() && !cases.count(r.case_label)) return false;
    for (const auto& p : properties) {
      if (p == "principal" && !r.ck_principal) return false;
      if (p == "nonprincipal" && r.ck_principal) return false;
      if (p == "trivial" && !r.z_theta_maximal) return false;
      if (p == "nontrivial" && r.z_theta_maximal) return false;
      if (p == "monogenic" && !r.field_monogenic) return false;
      if (p == "nonmonogenic" && r.field_monogenic) return false;
    }
    return true;
  }
};

std::set<CaseLabel> parse_cases(const std::vector<std::string>& raw) {
  std::set<CaseLabel> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        out.insert(case_label_from_string(tok));
      } catch (const std::invalid_argument&) {
        throw UsageError("unknown case '" + tok + "' (expected a, b or c)");
      }
    }
  }
  return out;
}

int run_analyze(const std::string& t_arg, bool verify, bool fast, const std::string& format) {
  AnalyzeOptions options{verify, fast ? DecisionMode::kFast : DecisionMode::kChecked};
  VerificationReport report;
  const AnalysisRecord r = analyze(parse_integer(t_arg), options, &report);
  if (format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << csv_header() << '\n' << to_csv_row(r) << '\n';
  } else {
    std::cout << to_text(r);
    if (verify) std::cout << '\n' << report.to_string();
  }
  return r.verification && !r.verification->passed() ? kVerificationFailed : kOk;
}

int run_scan(const std::string& lo, const std::string& hi, const Filters& filters, unsigned jobs,
             bool verify, bool fast, const std::string& format) {
  ScanOptions options;
  options.lo = parse_integer(lo);
  options.hi = parse_integer(hi);
  if (options.lo < -1 || options.hi < options.lo)
    throw UsageError("scan range must satisfy -1 <= lo <= hi");
  options.jobs = jobs == 0 ? default_jobs() : jobs;
  options.analyze = {verify, fast ? DecisionMode::kFast : DecisionMode::kChecked};
  options.keep = [&filters](const AnalysisRecord& r) { return filters.keep(r); };

  if (format == "csv") std::cout << csv_header() << '\n';
  bool all_verified = true;
  scan(options, [&](const AnalysisRecord& r) {
    if (r.verification && !r.verification->passed()) all_verified = false;
    if (format == "json") {
      std::cout << to_json(r).dump() << '\n';
    } else if (format == "csv") {
      std::cout << to_csv_row(r) << '\n';
    } else {
      std::cout << to_text_line(r) << '\n';
    }
  });
  return all_verified ? kOk : kVerificationFailed;
}

int run_tables(int which, const std::string& fixture_dir) {
  const Fixtures fixtures =
      fixture_dir.empty() ? Fixtures::embedded() : Fixtures::load(fixture_dir);
  VerificationReport report;
  if (which == 1) {
    std::cout << "# t|delta|conductor|case|other t with the same field\n";
    for (const auto& row : regenerate_table1()) std::cout << format_table_row(row) << '\n';
    std::cout << "# case (c), -1 <= t <= " << kCaseCScanLast << '\n';
    const auto list = regenerate_case_c_list();
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::cout << list[i].get_str() << ((i + 1) % 12 == 0 || i + 1 == list.size() ? "\n" : ",");
    }
    report = reproduce_table1(fixtures);
  } else {
    std::cout << "# t|delta|conductor|case|other t with the same field\n";
    for (const auto& row : regenerate_table2()) std::cout << format_table_row(row) << '\n';
    report = reproduce_table2(fixtures);
  }
  if (report.overall()) {
    std::cout << "# fixture comparison: " << report.checks().size() << " checks, all match\n";
    return kOk;
  }
  std::cout << "# fixture comparison: " << report.failures() << " mismatches\n";
  for (const auto& c : report.checks()) {
    if (!c.passed) std::cout << "MISMATCH " << c.name << ": " << c.detail << '\n';
  }
  return kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monogenity, conductors and power integral bases of the simplest cubic fields"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  std::string format = "text";
  bool verify = false;
  bool fast = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a single parameter t");
  std::string t_arg;
  analyze_cmd->add_option("t", t_arg, "Shanks parameter (any integer)")->required();
  analyze_cmd->add_flag("--verify", verify, "Run the exact field-arithmetic checks");
  analyze_cmd->add_flag("--fast", fast, "Skip the redundant equivalent-criterion checks");
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* scan_cmd = app.add_subcommand("scan", "Analyze every t in [lo, hi]");
  std::string lo_arg, hi_arg;
  std::vector<std::string> cases_arg;
  std::vector<std::string> filter_arg;
  unsigned jobs = 0;
  scan_cmd->add_option("lo", lo_arg, "First parameter (>= -1)")->required();
  scan_cmd->add_option("hi", hi_arg, "Last parameter")->required();
  scan_cmd->add_option("--cases", cases_arg, "Keep only these cases (a,b,c)");
  scan_cmd
      ->add_option("--filter", filter_arg, "Keep only records with these properties")
      ->check(CLI::IsMember({"principal", "nonprincipal", "trivial", "nontrivial", "monogenic",
                             "nonmonogenic"}));
  scan_cmd->add_option("--jobs,-j", jobs, "Worker threads (default: $SIMPLECUBIC_JOBS or all cores)");
  scan_cmd->add_flag("--verify", verify, "Run the exact field-arithmetic checks per t");
  scan_cmd->add_flag("--fast", fast, "Skip the redundant equivalent-criterion checks");
  scan_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));

  auto* tables_cmd = app.add_subcommand("tables", "Regenerate a golden table and diff it");
  int which = 0;
  std::string fixture_dir;
  tables_cmd->add_option("which", which, "Table number (1 or 2)")->required();
  tables_cmd->add_option("--fixtures", fixture_dir, "Directory with fixture files to diff against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(t_arg, verify, fast, format);
    if (scan_cmd->parsed()) {
      Filters filters{parse_cases(cases_arg), filter_arg};
      return run_scan(lo_arg, hi_arg, filters, jobs, verify, fast, format);
    }
    if (tables_cmd->parsed()) {
      if (which != 1 && which != 2) throw UsageError("unknown table " + std::to_string(which));
      return run_tables(which, fixture_dir);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FactorizationError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
