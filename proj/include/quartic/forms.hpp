#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <quartic/arith.hpp>

/// Registry of quartic forms that are never squares outside an explicit
/// exception set, with exact evaluators and exception predicates.
namespace quartic::forms {

enum class ParamRole {
  Variable,         // scanned over 0..bound
  Auxiliary,        // family parameter, 1..family bound
  SignedAuxiliary,  // family parameter, nonzero in -family bound..family bound
};

std::string_view to_string(ParamRole role);

struct ParamSpec {
  std::string name;
  ParamRole role;
};

/// coefficient * prod(param[i] ^ exponents[i]), exponents in FormDef::params order.
struct Monomial {
  Integer coefficient;
  std::vector<unsigned> exponents;
};

template <typename T>
using Evaluator = std::function<T(std::span<const T>)>;

/// Receives the parameters and the already computed form value.
template <typename T>
using ExceptionPredicate = std::function<bool(std::span<const T>, const T&)>;

struct FormDef {
  std::string id;
  std::string family;
  std::string polynomial;
  std::vector<ParamSpec> params;
  /// Expanded monomials; an independent description of the same polynomial.
  std::vector<Monomial> terms;
  std::string exception;
  std::vector<std::string> aliases;

  Evaluator<Integer> evaluate_exact;
  Evaluator<i128> evaluate_fast;
  ExceptionPredicate<Integer> exception_exact;
  ExceptionPredicate<i128> exception_fast;

  std::size_t arity() const { return params.size(); }
  /// Indices of the two scanned variables (the coprimality filter applies to them).
  std::pair<std::size_t, std::size_t> variable_indices() const;
};

class Catalog {
 public:
  static const Catalog& instance();

  std::span<const FormDef> forms() const { return forms_; }

  /// Throws UnknownForm.
  const FormDef& get(std::string_view id) const;

  /// All variants for a family id ("F10" gives F10+ and F10-), or the single
  /// form for a variant id. Throws UnknownForm.
  std::vector<const FormDef*> resolve(std::string_view id) const;

  /// id, polynomial, parameters, expanded terms and exception description per form.
  nlohmann::json manifest() const;

 private:
  Catalog();
  std::vector<FormDef> forms_;
};

using ParamMap = std::map<std::string, Integer, std::less<>>;

struct FormInstance {
  std::string form;
  /// In the form's parameter order.
  std::vector<std::pair<std::string, Integer>> params;
  Integer value;
  bool is_square = false;
  bool is_exception = false;
};

/// Throws UnknownForm; ArityMismatch when the names differ from the form's
/// parameters; InvalidArgument for a negative parameter that is not signed.
FormInstance evaluate(std::string_view form_id, const ParamMap& params);
FormInstance evaluate(const FormDef& form, std::span<const Integer> ordered);

/// Degenerate squares of c1*x^4 + c2*y^4: zero value, a vanishing variable
/// leaving a square coefficient, or the balanced point c1*x^4 = c2*y^4 where
/// the value 2*c1*x^4 is a square.
template <typename T>
bool binary_quartic_degenerate(const T& c1, const T& c2, const T& x, const T& y, const T& value) {
  if (value == 0) return true;
  if (y == 0 && is_square(c1)) return true;
  if (x == 0 && is_square(c2)) return true;
  const T x2 = x * x;
  const T y2 = y * y;
  return c1 * x2 * x2 == c2 * y2 * y2 && is_square(2 * c1);
}

/// Forms obtained from a non-square base x^4 + k*y^4 by substituting
/// m = alpha*x^2, n = beta*y^2 into its rational root parametrization, with
/// alpha and beta fixed. Each result is a binary quartic in (x, y).
///
/// Throws UnsupportedK unless k is 1 or 2 and InvalidArgument when alpha or
/// beta is zero.
std::vector<FormDef> derive_families(const Natural& k, const Integer& alpha, const Integer& beta);

}  // namespace quartic::forms
