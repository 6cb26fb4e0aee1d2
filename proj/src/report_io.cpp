#include "hankel/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hankel {

namespace {

using Json = nlohmann::ordered_json;

Json json_of(const BoundBreakdown& b) {
  Json j;
  j["variant"] = to_string(b.variant);
  j["delta"] = b.delta;
  j["c"] = b.c_coef;
  j["case_id"] = to_string(b.case_id);
  if (b.tau0)
    j["tau0"] = *b.tau0;
  else
    j["tau0"] = nullptr;
  j["h_zero"] = b.h_zero;
  j["h_end"] = b.h_end;
  if (b.h_tau0)
    j["h_tau0"] = *b.h_tau0;
  else
    j["h_tau0"] = nullptr;
  j["bound"] = b.bound;
  return j;
}

Variant variant_from(const std::string& s) {
  if (s == "printed") return Variant::printed;
  if (s == "derived") return Variant::derived;
  throw std::invalid_argument("unknown variant: " + s);
}

CaseId case_from(const std::string& s) {
  if (s == "i") return CaseId::i;
  if (s == "ii") return CaseId::ii;
  if (s == "iii") return CaseId::iii;
  if (s == "iv") return CaseId::iv;
  if (s == "degenerate") return CaseId::degenerate;
  throw std::invalid_argument("unknown case id: " + s);
}

BoundBreakdown breakdown_of(const Json& j) {
  BoundBreakdown b;
  b.variant = variant_from(j.at("variant").get<std::string>());
  b.delta = j.at("delta").get<double>();
  b.c_coef = j.at("c").get<double>();
  b.case_id = case_from(j.at("case_id").get<std::string>());
  if (!j.at("tau0").is_null()) b.tau0 = j.at("tau0").get<double>();
  b.h_zero = j.at("h_zero").get<double>();
  b.h_end = j.at("h_end").get<double>();
  if (!j.at("h_tau0").is_null()) b.h_tau0 = j.at("h_tau0").get<double>();
  b.bound = j.at("bound").get<double>();
  return b;
}

Json json_of_complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_of(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Json json_of(const AuditReport& r) {
  Json j;
  j["beta"] = r.beta;
  j["t"] = r.t;
  j["printed"] = json_of(r.printed);
  j["derived"] = json_of(r.derived);
  j["numeric_bound"] = r.numeric_bound;
  j["empirical_max"] = r.empirical_max;
  j["argmax"] = Json{{"tau", r.argmax.tau}, {"xi", r.argmax.xi}, {"eta", r.argmax.eta}};
  j["witness"] = Json{{"p1", json_of_complex(r.witness.p1)},
                      {"x", json_of_complex(r.witness.x)},
                      {"y", json_of_complex(r.witness.y)},
                      {"z", json_of_complex(r.witness.z)},
                      {"w", json_of_complex(r.witness.w)}};
  if (r.corollary)
    j["corollary"] = *r.corollary;
  else
    j["corollary"] = nullptr;
  j["flags"] = r.flags;
  j["seed"] = r.seed;
  j["sample_count"] = r.sample_count;
  j["grid_resolution"] = r.grid_resolution;
  j["tau_resolution"] = r.tau_resolution;
  j["errata"] = r.errata;
  return j;
}

AuditReport report_of(const Json& j) {
  AuditReport r;
  r.beta = j.at("beta").get<double>();
  r.t = j.at("t").get<double>();
  r.printed = breakdown_of(j.at("printed"));
  r.derived = breakdown_of(j.at("derived"));
  r.numeric_bound = j.at("numeric_bound").get<double>();
  r.empirical_max = j.at("empirical_max").get<double>();
  r.argmax = {j.at("argmax").at("tau").get<double>(), j.at("argmax").at("xi").get<double>(),
              j.at("argmax").at("eta").get<double>()};
  const Json& w = j.at("witness");
  r.witness = {complex_of(w.at("p1")), complex_of(w.at("x")), complex_of(w.at("y")),
               complex_of(w.at("z")), complex_of(w.at("w"))};
  if (!j.at("corollary").is_null()) r.corollary = j.at("corollary").get<double>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.sample_count = j.at("sample_count").get<std::int64_t>();
  r.grid_resolution = j.at("grid_resolution").get<int>();
  r.tau_resolution = j.at("tau_resolution").get<int>();
  r.errata = j.at("errata").get<std::vector<std::string>>();
  return r;
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += ';';
    out += flags[i];
  }
  return out;
}

std::vector<std::string> split_flags(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < s.size()) {
    const std::size_t end = s.find(';', start);
    if (end == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

Json json_of(const SweepRow& row) {
  Json j;
  j["beta"] = row.beta;
  j["t"] = row.t;
  j["variant"] = row.variant;
  j["delta"] = row.delta;
  j["c"] = row.c;
  j["case_id"] = row.case_id;
  if (row.tau0)
    j["tau0"] = *row.tau0;
  else
    j["tau0"] = nullptr;
  j["h_zero"] = row.h_zero;
  j["h_end"] = row.h_end;
  if (row.h_tau0)
    j["h_tau0"] = *row.h_tau0;
  else
    j["h_tau0"] = nullptr;
  j["bound"] = row.bound;
  j["numeric_bound"] = row.numeric_bound;
  j["empirical_max"] = row.empirical_max;
  j["flags"] = row.flags;
  return j;
}

}  // namespace

SweepRow make_sweep_row(const AuditReport& report, const BoundBreakdown& breakdown) {
  SweepRow row;
  row.beta = report.beta;
  row.t = report.t;
  row.variant = to_string(breakdown.variant);
  row.delta = breakdown.delta;
  row.c = breakdown.c_coef;
  row.case_id = to_string(breakdown.case_id);
  row.tau0 = breakdown.tau0;
  row.h_zero = breakdown.h_zero;
  row.h_end = breakdown.h_end;
  row.h_tau0 = breakdown.h_tau0;
  row.bound = breakdown.bound;
  row.numeric_bound = report.numeric_bound;
  row.empirical_max = report.empirical_max;
  row.flags = report.flags;
  return row;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json_string(const BoundBreakdown& b) { return json_of(b).dump(2) + "\n"; }

std::string to_json_string(const AuditReport& r) { return json_of(r).dump(2) + "\n"; }

std::string to_json_string(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back(json_of(row));
  return arr.dump(2) + "\n";
}

std::string to_json_string(const std::vector<RegionRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["beta"] = row.beta;
    j["t"] = row.t;
    j["delta_printed"] = row.delta_printed;
    j["c_printed"] = row.c_printed;
    j["case_printed"] = to_string(row.case_printed);
    j["bound_printed"] = row.bound_printed;
    j["delta_derived"] = row.delta_derived;
    j["c_derived"] = row.c_derived;
    j["case_derived"] = to_string(row.case_derived);
    j["bound_derived"] = row.bound_derived;
    j["agree"] = row.agree;
    arr.push_back(j);
  }
  return arr.dump(2) + "\n";
}

BoundBreakdown bound_breakdown_from_json(const std::string& text) {
  return breakdown_of(Json::parse(text));
}

AuditReport audit_report_from_json(const std::string& text) { return report_of(Json::parse(text)); }

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "beta,t,variant,delta,c,case_id,tau0,h_zero,h_end,h_tau0,bound,numeric_bound,"
         "empirical_max,flags\n";
  for (const auto& r : rows) {
    out << format_double(r.beta) << ',' << format_double(r.t) << ',' << r.variant << ','
        << format_double(r.delta) << ',' << format_double(r.c) << ',' << r.case_id << ','
        << (r.tau0 ? format_double(*r.tau0) : "") << ',' << format_double(r.h_zero) << ','
        << format_double(r.h_end) << ',' << (r.h_tau0 ? format_double(*r.h_tau0) : "") << ','
        << format_double(r.bound) << ',' << format_double(r.numeric_bound) << ','
        << format_double(r.empirical_max) << ',' << join_flags(r.flags) << '\n';
  }
  return out.str();
}

std::vector<SweepRow> sweep_rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("sweep CSV: missing header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    if (fields.size() != 14) throw std::invalid_argument("sweep CSV: bad field count");
    SweepRow r;
    r.beta = std::stod(fields[0]);
    r.t = std::stod(fields[1]);
    r.variant = fields[2];
    r.delta = std::stod(fields[3]);
    r.c = std::stod(fields[4]);
    r.case_id = fields[5];
    if (!fields[6].empty()) r.tau0 = std::stod(fields[6]);
    r.h_zero = std::stod(fields[7]);
    r.h_end = std::stod(fields[8]);
    if (!fields[9].empty()) r.h_tau0 = std::stod(fields[9]);
    r.bound = std::stod(fields[10]);
    r.numeric_bound = std::stod(fields[11]);
    r.empirical_max = std::stod(fields[12]);
    if (!fields[13].empty()) r.flags = split_flags(fields[13]);
    rows.push_back(r);
  }
  return rows;
}

std::string to_csv(const std::vector<RegionRow>& rows) {
  std::ostringstream out;
  out << "beta,t,delta_printed,c_printed,case_printed,bound_printed,delta_derived,c_derived,"
         "case_derived,bound_derived,agree\n";
  for (const auto& r : rows) {
    out << format_double(r.beta) << ',' << format_double(r.t) << ','
        << format_double(r.delta_printed) << ',' << format_double(r.c_printed) << ','
        << to_string(r.case_printed) << ',' << format_double(r.bound_printed) << ','
        << format_double(r.delta_derived) << ',' << format_double(r.c_derived) << ','
        << to_string(r.case_derived) << ',' << format_double(r.bound_derived) << ','
        << (r.agree ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace hankel
