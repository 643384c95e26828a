#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <quartic/arith.hpp>
#include <quartic/pythagoras.hpp>

/// One reduction step of each infinite-descent argument, replayed with exact
/// arithmetic on a concrete candidate.
namespace quartic::descent {

enum class Tag { Reduced, Exception, Contradiction };

std::string_view to_string(Tag tag);

using Bindings = std::vector<std::pair<std::string, Integer>>;

struct TraceStep {
  std::string label;
  Bindings bindings;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct DescentOutcome {
  Tag tag = Tag::Contradiction;
  std::optional<std::pair<Natural, Natural>> reduced;
  std::optional<std::string> exception_name;
  /// Condition id, see condition_holds.
  std::optional<std::string> violated;
  std::vector<TraceStep> trace;

  /// All trace bindings; a later step overrides an earlier name.
  Bindings merged_bindings() const;

  friend bool operator==(const DescentOutcome&, const DescentOutcome&) = default;
};

/// Checkable predicates a replay may stop at.
struct Condition {
  std::string_view id;
  /// Printed when the condition fails, e.g. "a^4+b^4 not a perfect square".
  std::string_view failure;
};

std::span<const Condition> conditions();
const Condition& condition(std::string_view id);

/// Re-evaluates a condition from bound values. InvalidArgument for an unknown
/// id or a missing binding.
bool condition_holds(std::string_view id, const Bindings& bindings);

/// x^4 + y^4 square. Exception "vanishing term" when a*b = 0; NotCoprime.
DescentOutcome descend_sum_of_fourth_powers(const Natural& a, const Natural& b);

/// a^4 - b^4 square, a > b. Exceptions "b = 0" and "a = b" come first, then
/// OrderViolation for a < b, then NotCoprime.
DescentOutcome descend_difference_of_fourth_powers(const Natural& a, const Natural& b);

/// a^4 + 2*b^4 square. Exception "b = 0"; NotCoprime.
DescentOutcome descend_fourth_power_plus_double(const Natural& a, const Natural& b);

/// Height reduction for b*c*(c^2 - 3bc + 3b^2), where a = c - b and the cube
/// candidate is a/b.
///
/// Exceptions "b = 0 degenerate", "a = 0 degenerate" (c = b) and
/// "cube 8 case" (c = 3b). InvalidArgument for c = 0; NotCoprime.
/// A Reduced pair is (b', c') of the same shape with b' + c' < b + c.
DescentOutcome reduce_cube_form(const Natural& b, const Natural& c);

/// b*c*(c^2 - 3bc + 3b^2).
Integer cube_form_value(const Integer& b, const Integer& c);

/// For odd coprime a > b.
struct HalvesReport {
  Natural a;
  Natural b;
  bool doubled_sum_identity = false;  // 2a^4+2b^4 = (a^2+b^2)^2 + (a^2-b^2)^2
  Natural half_sum;                   // (a^2+b^2)/2, odd
  Natural half_diff;                  // (a^2-b^2)/2, even
  bool halves_coprime = false;
  Natural lower_half;                 // (a-b)/2
  Natural upper_half;                 // (a+b)/2
  std::optional<Natural> p;           // sqrt((a-b)/2)
  std::optional<Natural> q;           // sqrt((a+b)/2)
  /// (a^2+b^2)/2 = p^4 + q^4; set only when both halves are squares.
  std::optional<bool> fourth_power_identity;
};

/// ParityViolation unless both are odd; OrderViolation for a <= b; NotCoprime.
HalvesReport check_halves_identities(const Natural& a, const Natural& b);

struct IdentityCheck {
  std::string name;
  Integer lhs;
  Integer rhs;

  bool holds() const { return lhs == rhs; }
};

/// (p^2-q^2)^2 + (2pq)^2 = (p^2+q^2)^2
IdentityCheck pythagorean_parametrization(const Integer& p, const Integer& q);
/// 2a^4 + 2b^4 = (a^2+b^2)^2 + (a^2-b^2)^2
IdentityCheck doubled_sum_decomposition(const Integer& a, const Integer& b);
/// a^4 - 6a^2b^2 + b^4 = (a^2-b^2)^2 - 4a^2b^2
IdentityCheck minus_six_decomposition(const Integer& a, const Integer& b);
/// a^4 + 6a^2b^2 + b^4 = (a^2+b^2)^2 + 4a^2b^2
IdentityCheck plus_six_decomposition(const Integer& a, const Integer& b);
/// (p^2+3q^2)(p-q)(p-3q) = t*u*(3t^2-3tu+u^2), t = p-q, u = p-3q
IdentityCheck cube_tu_substitution(const Integer& p, const Integer& q);
/// P^2 + Q^2 = 2a^4 + 2m^2b^4, P = a^2+mb^2, Q = a^2-mb^2
IdentityCheck mixed_square_sum(const Integer& a, const Integer& b, const Integer& m);
/// n^2(c^2-3bc+3b^2) = (mb-nc)^2 for b = 3n^2-2mn, c = 3n^2-m^2
IdentityCheck cube_root_parametrization(const Integer& m, const Integer& n);

}  // namespace quartic::descent
