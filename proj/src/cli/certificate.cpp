#include <quartic/cli.hpp>

#include <quartic/version.hpp>

namespace quartic::cli {

using nlohmann::json;

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

CertificateRecord make(std::string kind, json payload, std::string config_hash) {
  CertificateRecord r;
  r.schema_version = kSchemaVersion;
  r.kind = std::move(kind);
  r.payload = std::move(payload);
  r.tool_version = std::string(kToolVersion);
  r.config_hash = std::move(config_hash);
  return r;
}

std::string hash_of(std::string_view kind, const json& payload) {
  return scan::fnv1a_hex(std::string(kind) + ";" + payload.dump() + ";tool=" +
                         std::string(kToolVersion));
}

json hit_json(const scan::ClaimResult& claim, const scan::Hit& h) {
  json params = json::object();
  for (std::size_t i = 0; i < h.params.size() && i < claim.param_names.size(); ++i) {
    params[claim.param_names[i]] = h.params[i].to_string();
  }
  return {{"params", params},
          {"value", h.value},
          {"solution", h.solution},
          {"is_square", h.is_square},
          {"is_exception", h.is_exception}};
}

json claim_json(const scan::ClaimResult& c, std::size_t max_listed) {
  const auto squares = c.squares();
  const auto violations = c.violations();
  json listed = json::array();
  for (std::size_t i = 0; i < squares.size() && i < max_listed; ++i) {
    listed.push_back(hit_json(c, squares[i]));
  }
  json violating = json::array();
  for (std::size_t i = 0; i < violations.size() && i < max_listed; ++i) {
    violating.push_back(hit_json(c, violations[i]));
  }
  std::size_t exceptions = 0;
  for (const auto& h : c.hits) exceptions += h.is_exception ? 1 : 0;
  return {{"name", c.name},
          {"params", c.param_names},
          {"candidates_tested", num(c.candidates_tested)},
          {"squares_found", num(squares.size())},
          {"squares", listed},
          {"exceptions_flagged", num(exceptions)},
          {"violation_count", num(violations.size())},
          {"violations", violating},
          {"expected", c.expected},
          {"missing_expected", c.missing_expected},
          {"oracle_samples", num(c.oracle_samples)},
          {"oracle_mismatches", num(c.oracle_mismatches)},
          {"cross_check_mismatches", num(c.cross_check_mismatches)},
          {"mismatch_examples", c.mismatch_examples},
          {"notes", c.notes}};
}

json bindings_json(const descent::Bindings& b) {
  json out = json::array();
  for (const auto& [name, value] : b) out.push_back(json::array({name, value.to_string()}));
  return out;
}

template <typename T>
T require_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::InvalidArgument, std::string("record field missing: ") + key);
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("record field has wrong type: ") + key);
  }
}

}  // namespace

json CertificateRecord::to_json() const {
  return {{"schema_version", schema_version},
          {"kind", kind},
          {"payload", payload},
          {"tool_version", tool_version},
          {"config_hash", config_hash}};
}

CertificateRecord CertificateRecord::from_json(const json& j) {
  CertificateRecord r;
  r.schema_version = require_field<int>(j, "schema_version");
  r.kind = require_field<std::string>(j, "kind");
  r.payload = require_field<json>(j, "payload");
  r.tool_version = require_field<std::string>(j, "tool_version");
  r.config_hash = require_field<std::string>(j, "config_hash");
  if (!r.payload.is_object()) throw Error(ErrorCode::InvalidArgument, "payload must be an object");
  return r;
}

std::string CertificateRecord::serialize() const { return to_json().dump(); }

CertificateRecord CertificateRecord::parse(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
  return from_json(j);
}

CertificateRecord triple_record(std::string_view operation, const PrimitiveTriple& t) {
  const DivisibilityReport d = divisibility_report(t);
  json payload = {{"operation", operation},
                  {"p", t.gen.p.to_string()},
                  {"q", t.gen.q.to_string()},
                  {"a", t.a.to_string()},
                  {"b", t.b.to_string()},
                  {"c", t.c.to_string()},
                  {"divisibility",
                   {{"div3", to_string(d.div3)}, {"div4", to_string(d.div4)},
                    {"div5", to_string(d.div5)}}}};
  std::string hash = hash_of("triple", payload);
  return make("triple", std::move(payload), std::move(hash));
}

CertificateRecord form_eval_record(const forms::FormInstance& inst) {
  json params = json::object();
  for (const auto& [name, value] : inst.params) params[name] = value.to_string();
  json payload = {{"form", inst.form},
                  {"params", params},
                  {"value", inst.value.to_string()},
                  {"is_square", inst.is_square},
                  {"is_exception", inst.is_exception}};
  std::string hash = hash_of("form_eval", payload);
  return make("form_eval", std::move(payload), std::move(hash));
}

CertificateRecord scan_record(const scan::ScanReport& report, const ScanRecordOptions& options) {
  json bounds = json::object();
  for (const auto& [k, v] : report.bounds) bounds[k] = v;
  json claims = json::array();
  for (const auto& c : report.claims) claims.push_back(claim_json(c, options.max_listed));
  json payload = {{"target", report.target},
                  {"bounds", bounds},
                  {"claims", claims},
                  {"totals",
                   {{"candidates_tested", num(report.candidates_tested())},
                    {"squares_found", num(report.square_count())},
                    {"violation_count", num(report.violation_count())},
                    {"oracle_samples", num(report.oracle_samples())},
                    {"oracle_mismatches", num(report.oracle_mismatches())}}},
                  {"max_listed", num(options.max_listed)}};
  if (options.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(report.elapsed);
    payload["elapsed_us"] = num(static_cast<std::uint64_t>(us.count()));
  }
  return make("scan_summary", std::move(payload), report.config_hash);
}

CertificateRecord descent_record(std::string_view theorem, const Natural& first,
                                 const Natural& second, const descent::DescentOutcome& outcome) {
  const bool cube = theorem == "10";
  json trace = json::array();
  for (const auto& step : outcome.trace) {
    trace.push_back({{"label", step.label}, {"bindings", bindings_json(step.bindings)}});
  }
  json payload = {{"theorem", theorem},
                  {"input",
                   {{cube ? "b" : "a", first.to_string()}, {cube ? "c" : "b", second.to_string()}}},
                  {"tag", to_string(outcome.tag)},
                  {"reduced", nullptr},
                  {"exception", nullptr},
                  {"violated", nullptr},
                  {"trace", trace}};
  if (outcome.reduced) {
    payload["reduced"] = json::array(
        {outcome.reduced->first.to_string(), outcome.reduced->second.to_string()});
  }
  if (outcome.exception_name) payload["exception"] = *outcome.exception_name;
  if (outcome.violated) {
    payload["violated"] = {{"id", *outcome.violated},
                           {"failure", descent::condition(*outcome.violated).failure}};
  }
  std::string hash =
      hash_of("descent_trace", json{{"theorem", theorem}, {"input", payload["input"]}});
  return make("descent_trace", std::move(payload), std::move(hash));
}

CertificateRecord catalog_record(const json& manifest_entry) {
  json payload = manifest_entry;
  std::string hash = hash_of("catalog_entry", payload);
  return make("catalog_entry", std::move(payload), std::move(hash));
}

}  // namespace quartic::cli
