#include "simplecubic/record.hpp"

#include <sstream>

namespace simplecubic {

using nlohmann::ordered_json;

namespace {

ordered_json integer_to_json(const Integer& n) {
  if (fits_int64(n)) return to_int64(n);
  return n.get_str();
}

Integer integer_from_json(const ordered_json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return from_uint64(j.get<std::uint64_t>());
  if (j.is_number_integer()) return from_int64(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

ordered_json optional_to_json(const std::optional<Integer>& n) {
  return n ? integer_to_json(*n) : ordered_json(nullptr);
}

std::optional<Integer> optional_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return integer_from_json(j);
}

std::string optional_to_string(const std::optional<Integer>& n) { return n ? n->get_str() : ""; }

std::optional<Integer> optional_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Integer(s);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::invalid_argument("expected true/false, got '" + s + "'");
}

}  // namespace

AnalysisRecord analyze(const Integer& t, const AnalyzeOptions& options,
                       VerificationReport* report) {
  AnalysisRecord r;
  r.t = t;
  r.normalized_t = reduce_param(t);
  const ConductorData data = conductor(r.normalized_t);
  const MonogenityVerdict v = field_monogenic(data, options.mode);
  r.delta = data.delta;
  r.conductor = data.conductor;
  r.three_case = data.three_case;
  r.case_label = v.case_label;
  r.z_theta_maximal = v.z_theta_maximal;
  r.parameter_monogenic = v.parameter_monogenic;
  r.field_monogenic = v.field_monogenic;
  r.ck_principal = v.ck_principal;
  r.witness_t = v.witness_t;
  if (v.certificate) {
    r.pib_a = v.certificate->a;
    r.pib_m = v.certificate->m;
  }
  if (options.verify) {
    VerificationReport full("t=" + r.normalized_t.get_str());
    full.merge(check_shanks_relations(r.normalized_t));
    if (v.certificate) {
      full.merge(check_certificate(*v.certificate, data.conductor.value()));
    } else {
      full.merge(check_negative(r.normalized_t));
    }
    r.verification = VerificationSummary{full.checks().size(), full.failures()};
    if (report) *report = std::move(full);
  }
  return r;
}

ordered_json to_json(const AnalysisRecord& r) {
  ordered_json j;
  j["t"] = integer_to_json(r.t);
  j["normalized_t"] = integer_to_json(r.normalized_t);
  j["delta"] = integer_to_json(r.delta.value());
  j["delta_factors"] = r.delta.to_strings();
  j["conductor"] = integer_to_json(r.conductor.value());
  j["conductor_factors"] = r.conductor.to_strings();
  j["three_case"] = std::string(to_string(r.three_case));
  j["case"] = std::string(to_string(r.case_label));
  j["z_theta_maximal"] = r.z_theta_maximal;
  j["parameter_monogenic"] = r.parameter_monogenic;
  j["monogenic"] = r.field_monogenic;
  j["ck_principal"] = r.ck_principal;
  j["witness_t"] = optional_to_json(r.witness_t);
  j["pib_a"] = optional_to_json(r.pib_a);
  j["pib_m"] = optional_to_json(r.pib_m);
  if (r.verification) {
    j["verification"] = {{"checks", r.verification->checks},
                         {"failures", r.verification->failures},
                         {"passed", r.verification->passed()}};
  } else {
    j["verification"] = nullptr;
  }
  return j;
}

AnalysisRecord record_from_json(const ordered_json& j) {
  auto factors = [](const ordered_json& arr) {
    std::string joined;
    for (const auto& s : arr) joined += s.get<std::string>() + " ";
    return Factorization::parse(joined);
  };
  AnalysisRecord r;
  r.t = integer_from_json(j.at("t"));
  r.normalized_t = integer_from_json(j.at("normalized_t"));
  r.delta = factors(j.at("delta_factors"));
  r.conductor = factors(j.at("conductor_factors"));
  if (r.delta.value() != integer_from_json(j.at("delta")) ||
      r.conductor.value() != integer_from_json(j.at("conductor")))
    throw std::invalid_argument("record: factorization does not match value");
  r.three_case = three_adic_case_from_string(j.at("three_case").get<std::string>());
  r.case_label = case_label_from_string(j.at("case").get<std::string>());
  r.z_theta_maximal = j.at("z_theta_maximal").get<bool>();
  r.parameter_monogenic = j.at("parameter_monogenic").get<bool>();
  r.field_monogenic = j.at("monogenic").get<bool>();
  r.ck_principal = j.at("ck_principal").get<bool>();
  r.witness_t = optional_from_json(j.at("witness_t"));
  r.pib_a = optional_from_json(j.at("pib_a"));
  r.pib_m = optional_from_json(j.at("pib_m"));
  if (const auto& v = j.at("verification"); !v.is_null()) {
    r.verification = VerificationSummary{v.at("checks").get<std::size_t>(),
                                         v.at("failures").get<std::size_t>()};
  }
  return r;
}

std::string csv_header() {
  return "t,delta,delta_factors,conductor,conductor_factors,case,ck_principal,monogenic,"
         "witness_t,pib_a,pib_m";
}

std::string to_csv_row(const AnalysisRecord& r) {
  std::ostringstream out;
  out << r.t.get_str() << ',' << r.delta.value().get_str() << ',' << r.delta.to_string() << ','
      << r.conductor.value().get_str() << ',' << r.conductor.to_string() << ','
      << to_string(r.case_label) << ',' << (r.ck_principal ? "true" : "false") << ','
      << (r.field_monogenic ? "true" : "false") << ',' << optional_to_string(r.witness_t) << ','
      << optional_to_string(r.pib_a) << ',' << optional_to_string(r.pib_m);
  return out.str();
}

AnalysisRecord record_from_csv_row(const std::string& line) {
  std::vector<std::string> cols;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cols.push_back(cell);
  if (!line.empty() && line.back() == ',') cols.emplace_back();
  if (cols.size() != 11)
    throw std::invalid_argument("csv row needs 11 columns: '" + line + "'");
  AnalysisRecord r;
  r.t = Integer(cols[0]);
  r.normalized_t = reduce_param(r.t);
  r.delta = Factorization::parse(cols[2]);
  r.conductor = Factorization::parse(cols[4]);
  if (r.delta.value() != Integer(cols[1]) || r.conductor.value() != Integer(cols[3]))
    throw std::invalid_argument("csv row: factorization does not match value");
  r.three_case = three_case(r.normalized_t);
  r.case_label = case_label_from_string(cols[5]);
  r.z_theta_maximal = r.delta.value() == r.conductor.value();
  r.parameter_monogenic = r.case_label == CaseLabel::kA;
  r.ck_principal = parse_bool(cols[6]);
  r.field_monogenic = parse_bool(cols[7]);
  r.witness_t = optional_from_string(cols[8]);
  r.pib_a = optional_from_string(cols[9]);
  r.pib_m = optional_from_string(cols[10]);
  return r;
}

std::string to_text(const AnalysisRecord& r) {
  std::ostringstream out;
  out << "t                 " << r.t.get_str() << '\n';
  if (r.normalized_t != r.t) out << "normalized t      " << r.normalized_t.get_str() << '\n';
  out << "Delta             " << r.delta.value().get_str() << " = " << r.delta.to_string() << '\n'
      << "conductor         " << r.conductor.value().get_str() << " = "
      << r.conductor.to_string() << '\n'
      << "3-adic case       " << to_string(r.three_case) << '\n'
      << "case              (" << to_string(r.case_label) << ")\n"
      << "Z[theta] maximal  " << yes_no(r.z_theta_maximal) << '\n'
      << "monogenic         " << yes_no(r.field_monogenic) << '\n'
      << "C_K principal     " << yes_no(r.ck_principal) << '\n';
  if (r.witness_t) out << "witness t         " << r.witness_t->get_str() << '\n';
  if (r.pib_m) {
    out << "power basis       gamma = (theta_" << r.witness_t->get_str() << " - "
        << r.pib_a->get_str() << ")/" << r.pib_m->get_str() << "  (a=" << r.pib_a->get_str()
        << " m=" << r.pib_m->get_str() << ")\n";
  }
  if (r.verification) {
    out << "verification      " << (r.verification->passed() ? "pass" : "FAIL") << " ("
        << r.verification->checks - r.verification->failures << "/" << r.verification->checks
        << " checks)\n";
  }
  return out.str();
}

std::string to_text_line(const AnalysisRecord& r) {
  std::ostringstream out;
  out << "t=" << r.t.get_str() << " delta=" << r.delta.value().get_str() << " ["
      << r.delta.to_string() << "] c=" << r.conductor.value().get_str() << " ["
      << r.conductor.to_string() << "] case=" << to_string(r.case_label)
      << " principal=" << yes_no(r.ck_principal) << " monogenic=" << yes_no(r.field_monogenic);
  if (r.pib_m) {
    out << " witness=" << r.witness_t->get_str() << " a=" << r.pib_a->get_str()
        << " m=" << r.pib_m->get_str();
  }
  if (r.verification) out << " verified=" << (r.verification->passed() ? "pass" : "FAIL");
  return out.str();
}

}  // namespace simplecubic
