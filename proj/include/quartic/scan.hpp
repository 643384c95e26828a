#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <quartic/arith.hpp>
#include <quartic/forms.hpp>

/// Exhaustive desk-scale verification of the non-square claims.
namespace quartic::scan {

/// A tuple that is a square, is flagged as an exception, or both.
struct Hit {
  std::vector<Integer> params;
  std::string value;     // decimal, or a/b for rationals
  std::string solution;  // the candidate a claim is about, e.g. "2" or "9/4"
  bool is_square = false;
  bool is_exception = false;

  bool is_violation() const { return is_square != is_exception; }
  friend bool operator==(const Hit&, const Hit&) = default;
};

struct ClaimResult {
  std::string name;
  std::vector<std::string> param_names;
  std::uint64_t candidates_tested = 0;
  /// Squares and exception-flagged tuples, in enumeration order.
  std::vector<Hit> hits;
  /// For claim scans: the known solutions.
  std::vector<std::string> expected;
  std::vector<std::string> missing_expected;
  std::uint64_t oracle_samples = 0;
  std::uint64_t oracle_mismatches = 0;
  /// Disagreements between two independent routes of the same scan.
  std::uint64_t cross_check_mismatches = 0;
  std::vector<std::string> mismatch_examples;
  std::vector<std::string> notes;

  std::vector<Hit> squares() const;
  std::vector<Hit> violations() const;
  /// Solutions of the square hits.
  std::vector<std::string> square_values() const;

  friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct ScanReport {
  std::string target;
  /// name -> decimal bound, in a fixed order.
  std::vector<std::pair<std::string, std::string>> bounds;
  std::vector<ClaimResult> claims;
  std::chrono::nanoseconds elapsed{0};
  std::string config_hash;

  std::uint64_t candidates_tested() const;
  std::size_t square_count() const;
  std::size_t violation_count() const;
  std::uint64_t oracle_samples() const;
  std::uint64_t oracle_mismatches() const;
};

/// Worker count from QUARTIC_WORKERS, else the hardware concurrency.
unsigned default_workers();

/// 16 hex digits of FNV-1a 64 over the text.
std::string fnv1a_hex(std::string_view text);

struct ScanOptions {
  unsigned workers = 0;  // 0: default_workers()
};

/// All variants of a form or family id over variables 0..bound and auxiliary
/// parameters up to family_bound.
ScanReport verify_form(std::string_view form_id, const Natural& bound, bool coprime_only = false,
                       const Natural& family_bound = Natural(12), const ScanOptions& options = {});

ClaimResult scan_form(const forms::FormDef& form, std::uint64_t bound, bool coprime_only,
                      std::uint64_t family_bound, unsigned workers);

/// x(x+1)/2 a fourth power for x in 0..max_x.
ScanReport scan_triangular(const Natural& max_x, const ScanOptions& options = {});

/// 8y^4 + 1 square and 2z^2 - 2 a fourth power, up to max.
ScanReport scan_pell_corollaries(const Natural& max, const ScanOptions& options = {});

enum class CubeMode { Integer, Rational };

std::string_view to_string(CubeMode mode);

/// Integer mode: n^3 + 1 and n^3 - 1 square for n in 0..bound. Rational mode:
/// (a/b)^3 + 1 and (a/b)^3 - 1 rational squares for reduced a/b >= 0 of
/// height at most bound, each cross-checked against the integer forms
/// a^3*b + b^4 and a^3*b - b^4. Both modes add x^6 + y^6 and x^6 - y^6 over
/// coprime x, y <= sextic_bound.
ScanReport scan_cube_plus_one(CubeMode mode, const Natural& bound,
                              const Natural& sextic_bound = Natural(100),
                              const ScanOptions& options = {});

}  // namespace quartic::scan
