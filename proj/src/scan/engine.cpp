#include "engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>

#include <quartic/version.hpp>

namespace quartic::scan {

namespace {

constexpr std::size_t kMaxMismatchExamples = 10;

}  // namespace

std::vector<Hit> ClaimResult::squares() const {
  std::vector<Hit> out;
  std::copy_if(hits.begin(), hits.end(), std::back_inserter(out),
               [](const Hit& h) { return h.is_square; });
  return out;
}

std::vector<Hit> ClaimResult::violations() const {
  std::vector<Hit> out;
  std::copy_if(hits.begin(), hits.end(), std::back_inserter(out),
               [](const Hit& h) { return h.is_violation(); });
  return out;
}

std::vector<std::string> ClaimResult::square_values() const {
  std::vector<std::string> out;
  for (const Hit& h : hits) {
    if (h.is_square) out.push_back(h.solution);
  }
  return out;
}

std::uint64_t ScanReport::candidates_tested() const {
  std::uint64_t n = 0;
  for (const auto& c : claims) n += c.candidates_tested;
  return n;
}

std::size_t ScanReport::square_count() const {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.squares().size();
  return n;
}

std::size_t ScanReport::violation_count() const {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.violations().size();
  return n;
}

std::uint64_t ScanReport::oracle_samples() const {
  std::uint64_t n = 0;
  for (const auto& c : claims) n += c.oracle_samples;
  return n;
}

std::uint64_t ScanReport::oracle_mismatches() const {
  std::uint64_t n = 0;
  for (const auto& c : claims) n += c.oracle_mismatches + c.cross_check_mismatches;
  return n;
}

unsigned default_workers() {
  if (const char* env = std::getenv("QUARTIC_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string_view to_string(CubeMode mode) {
  return mode == CubeMode::Integer ? "integer" : "rational";
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

unsigned resolve_workers(unsigned requested) {
  return requested == 0 ? default_workers() : requested;
}

void merge_into(ClaimResult& into, ClaimResult&& part) {
  into.candidates_tested += part.candidates_tested;
  std::move(part.hits.begin(), part.hits.end(), std::back_inserter(into.hits));
  into.oracle_samples += part.oracle_samples;
  into.oracle_mismatches += part.oracle_mismatches;
  into.cross_check_mismatches += part.cross_check_mismatches;
  for (auto& m : part.mismatch_examples) {
    if (into.mismatch_examples.size() < kMaxMismatchExamples) into.mismatch_examples.push_back(m);
  }
}

void note_mismatch(ClaimResult& claim, std::string detail) {
  if (claim.mismatch_examples.size() < kMaxMismatchExamples) {
    claim.mismatch_examples.push_back(std::move(detail));
  }
}

void finalize(ClaimResult& claim) {
  claim.missing_expected.clear();
  const auto found = claim.square_values();
  for (const auto& e : claim.expected) {
    if (std::find(found.begin(), found.end(), e) == found.end()) claim.missing_expected.push_back(e);
  }
}

std::uint64_t to_u64(const Natural& n, const char* what) {
  if (n.as_integer().bit_length() > 40) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " is too large to scan");
  }
  return static_cast<std::uint64_t>(*n.as_integer().to_int64());
}

std::string join_params(std::span<const long long> values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

std::string report_hash(std::string_view kind, const ScanReport& report) {
  std::string config = std::string(kind) + ";target=" + report.target;
  for (const auto& [k, v] : report.bounds) config += ";" + k + "=" + v;
  return fnv1a_hex(config + ";tool=" + std::string(kToolVersion));
}

}  // namespace detail

}  // namespace quartic::scan
