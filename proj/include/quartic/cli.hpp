#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <quartic/descent.hpp>
#include <quartic/forms.hpp>
#include <quartic/pythagoras.hpp>
#include <quartic/scan.hpp>

namespace quartic::cli {

/// One JSONL line. Numbers in payloads are decimal strings.
struct CertificateRecord {
  int schema_version = 1;
  std::string kind;  // triple, form_eval, scan_summary, descent_trace, catalog_entry
  nlohmann::json payload = nlohmann::json::object();
  std::string tool_version;
  std::string config_hash;

  nlohmann::json to_json() const;
  /// Throws InvalidArgument when a field is missing or has the wrong type.
  static CertificateRecord from_json(const nlohmann::json& j);

  /// Compact, keys sorted, no trailing newline.
  std::string serialize() const;
  static CertificateRecord parse(std::string_view line);

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

CertificateRecord triple_record(std::string_view operation, const PrimitiveTriple& t);

CertificateRecord form_eval_record(const forms::FormInstance& inst);

struct ScanRecordOptions {
  bool timing = false;
  /// Caps the listed hits per claim; counts always cover everything.
  std::size_t max_listed = 1000;
};

CertificateRecord scan_record(const scan::ScanReport& report, const ScanRecordOptions& options = {});

/// theorem is "1", "2", "8" or "10"; inputs are (a, b), or (b, c) for "10".
CertificateRecord descent_record(std::string_view theorem, const Natural& first,
                                 const Natural& second, const descent::DescentOutcome& outcome);

CertificateRecord catalog_record(const nlohmann::json& manifest_entry);

/// 2 when the report lists a violation, else 3 on any oracle or cross-check
/// disagreement, else 0.
int exit_code_for(const scan::ScanReport& report);

/// Exit codes: 0 clean, 1 usage or input error, 2 violation (or a Reduced
/// descent outcome), 3 oracle or cross-check disagreement.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
