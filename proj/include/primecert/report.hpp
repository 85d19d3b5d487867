#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "primecert/certify.hpp"

namespace primecert {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

enum class Verdict { pass, fail, proved, refuted, undecided };
enum class ReportStatus { pass, fail, undecided };

std::string_view to_string(Verdict v);
std::string_view to_string(ReportStatus s);
Verdict verdict_from_string(std::string_view s);
ReportStatus status_from_string(std::string_view s);
Verdict to_verdict(CertStatus s);

struct ReportItem {
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::string witness;
  std::optional<Enclosure> margin;
  std::string note;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

/// Machine-readable outcome of one check.
///
/// status is pass iff every item is pass/proved, fail if any item is
/// fail/refuted, undecided otherwise; call finalize() after adding items.
struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  ReportStatus status = ReportStatus::pass;
  std::vector<ReportItem> items;
  std::vector<std::string> notes;
  std::int64_t timing_ms = 0;
  std::string artifact_version = kArtifactVersion;
  int schema_version = kReportSchemaVersion;

  void add(ReportItem item) { items.push_back(std::move(item)); }
  void add(const std::string& instance, const Certificate& cert);
  CheckReport& finalize();
  bool passed() const { return status == ReportStatus::pass; }

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

ReportStatus combine(const std::vector<Verdict>& verdicts);

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);
std::string serialize(const CheckReport& r);
CheckReport parse_report(const std::string& text);

/// CSV header: check_id,instance,verdict,witness,margin_lo,margin_hi,millis
std::string csv_header();
std::string to_csv_rows(const CheckReport& r);

}  // namespace primecert
