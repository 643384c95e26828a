#include <quartic/forms.hpp>

#include "form_builders.hpp"

namespace quartic::forms {

namespace {

std::string monomial_text(const Integer& c, const char* var, bool leading) {
  std::string out;
  Integer mag = c.abs();
  if (leading) {
    if (c.sign() < 0) out += "-";
  } else {
    out += c.sign() < 0 ? " - " : " + ";
  }
  if (mag != Integer(1)) out += mag.to_string() + "*";
  return out + var + "^4";
}

FormDef binary_form(std::string id, std::string family, const Integer& c1, const Integer& c2,
                    bool y_first) {
  std::string polynomial = y_first
                               ? monomial_text(c2, "y", true) + monomial_text(c1, "x", false)
                               : monomial_text(c1, "x", true) + monomial_text(c2, "y", false);
  const i128 f1 = c1.to_i128().value_or(0);
  const i128 f2 = c2.to_i128().value_or(0);
  FormDef f;
  f.id = std::move(id);
  f.family = std::move(family);
  f.polynomial = std::move(polynomial);
  f.params = {{"x", ParamRole::Variable}, {"y", ParamRole::Variable}};
  f.terms = {detail::term(c1, {4, 0}), detail::term(c2, {0, 4})};
  f.exception = "value = 0, or one variable is 0 and the other term's coefficient is a square, "
                "or c1*x^4 = c2*y^4 with 2*c1 a square";
  f.evaluate_exact = [c1, c2](std::span<const Integer> v) {
    return c1 * detail::pow4(v[0]) + c2 * detail::pow4(v[1]);
  };
  f.evaluate_fast = [f1, f2](std::span<const i128> v) {
    return f1 * detail::pow4(v[0]) + f2 * detail::pow4(v[1]);
  };
  f.exception_exact = [c1, c2](std::span<const Integer> v, const Integer& value) {
    return binary_quartic_degenerate(c1, c2, v[0], v[1], value);
  };
  f.exception_fast = [f1, f2](std::span<const i128> v, const i128& value) {
    return binary_quartic_degenerate(f1, f2, v[0], v[1], value);
  };
  return f;
}

}  // namespace

std::vector<FormDef> derive_families(const Natural& k, const Integer& alpha, const Integer& beta) {
  if (k != Natural(1) && k != Natural(2)) throw Error(ErrorCode::UnsupportedK, k.to_string());
  if (alpha.is_zero() || beta.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "alpha and beta must be nonzero");
  }
  const Integer& kk = k;
  const Integer a3b = alpha * alpha * alpha * beta;
  const Integer ab3 = alpha * beta * beta * beta;
  const std::string family = "derived(k=" + k.to_string() + ", alpha=" + alpha.to_string() +
                             ", beta=" + beta.to_string() + ")";

  std::vector<FormDef> out;
  out.push_back(binary_form("D1", family, 1, kk, false));
  out.push_back(binary_form("D2", family, -2 * a3b, 2 * kk * ab3, true));
  out.push_back(binary_form("D3", family, 2 * a3b, -2 * kk * ab3, false));
  out.push_back(binary_form("D4", family, 1, -4 * kk, false));
  out.push_back(binary_form("D5", family, 2 * a3b, 8 * kk * ab3, false));
  out.push_back(binary_form("D6", family, a3b, kk * ab3, false));
  return out;
}

}  // namespace quartic::forms
