#include "primecert/report.hpp"

#include <sstream>

#include "primecert/errors.hpp"

namespace primecert {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::proved: return "proved";
    case Verdict::refuted: return "refuted";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::undecided: return "undecided";
  }
  return "?";
}

Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::proved, Verdict::refuted, Verdict::undecided})
    if (to_string(v) == s) return v;
  throw UsageError("unknown verdict '" + std::string(s) + "'");
}

ReportStatus status_from_string(std::string_view s) {
  for (ReportStatus v : {ReportStatus::pass, ReportStatus::fail, ReportStatus::undecided})
    if (to_string(v) == s) return v;
  throw UsageError("unknown report status '" + std::string(s) + "'");
}

Verdict to_verdict(CertStatus s) {
  switch (s) {
    case CertStatus::proved: return Verdict::proved;
    case CertStatus::refuted: return Verdict::refuted;
    case CertStatus::undecided: return Verdict::undecided;
  }
  return Verdict::undecided;
}

ReportStatus combine(const std::vector<Verdict>& verdicts) {
  bool undecided = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::fail || v == Verdict::refuted) return ReportStatus::fail;
    if (v == Verdict::undecided) undecided = true;
  }
  return undecided ? ReportStatus::undecided : ReportStatus::pass;
}

void CheckReport::add(const std::string& instance, const Certificate& cert) {
  ReportItem item;
  item.instance = instance;
  item.verdict = to_verdict(cert.status);
  item.margin = cert.margin;
  item.note = cert.claim + " [precision " + std::to_string(cert.precision_used) + "]";
  for (const auto& n : cert.notes) item.note += "; " + n;
  items.push_back(std::move(item));
}

CheckReport& CheckReport::finalize() {
  std::vector<Verdict> v;
  v.reserve(items.size());
  for (const auto& i : items) v.push_back(i.verdict);
  status = combine(v);
  return *this;
}

json to_json(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json item = {{"instance", i.instance}, {"verdict", to_string(i.verdict)}, {"witness", i.witness}};
    if (i.margin) {
      item["margin"] = {{"lo", i.margin->lo().str()},
                        {"hi", i.margin->hi().str()},
                        {"lo_decimal", i.margin->lo().to_decimal(12)},
                        {"hi_decimal", i.margin->hi().to_decimal(12)}};
    } else {
      item["margin"] = nullptr;
    }
    item["note"] = i.note;
    items.push_back(std::move(item));
  }
  return json{{"check_id", r.check_id},
              {"params", r.params},
              {"status", to_string(r.status)},
              {"items", std::move(items)},
              {"notes", r.notes},
              {"timing_ms", r.timing_ms},
              {"versions", {{"artifact", r.artifact_version}, {"schema", r.schema_version}}}};
}

CheckReport report_from_json(const json& j) {
  try {
    CheckReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& ji : j.at("items")) {
      ReportItem item;
      item.instance = ji.at("instance").get<std::string>();
      item.verdict = verdict_from_string(ji.at("verdict").get<std::string>());
      item.witness = ji.at("witness").get<std::string>();
      if (!ji.at("margin").is_null())
        item.margin = Enclosure(BigRational::parse(ji["margin"].at("lo").get<std::string>()),
                                BigRational::parse(ji["margin"].at("hi").get<std::string>()));
      item.note = ji.at("note").get<std::string>();
      r.items.push_back(std::move(item));
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.timing_ms = j.at("timing_ms").get<std::int64_t>();
    r.artifact_version = j.at("versions").at("artifact").get<std::string>();
    r.schema_version = j.at("versions").at("schema").get<int>();
    return r;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

std::string serialize(const CheckReport& r) { return to_json(r).dump(2); }

CheckReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
  return report_from_json(j);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() { return "check_id,instance,verdict,witness,margin_lo,margin_hi,millis\n"; }

std::string to_csv_rows(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& i : r.items) {
    os << csv_field(r.check_id) << ',' << csv_field(i.instance) << ',' << to_string(i.verdict) << ','
       << csv_field(i.witness) << ',' << (i.margin ? i.margin->lo().str() : "") << ','
       << (i.margin ? i.margin->hi().str() : "") << ',' << r.timing_ms << '\n';
  }
  return os.str();
}

}  // namespace primecert
