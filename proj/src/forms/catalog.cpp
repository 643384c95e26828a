#include <quartic/forms.hpp>

#include <algorithm>

#include "form_builders.hpp"

namespace quartic::forms {

using detail::make_form;
using detail::pow4;
using detail::sq;
using detail::term;

namespace {

const ParamSpec kA{"a", ParamRole::Variable};
const ParamSpec kB{"b", ParamRole::Variable};
const ParamSpec kX{"x", ParamRole::Variable};
const ParamSpec kY{"y", ParamRole::Variable};
const ParamSpec kP{"p", ParamRole::Variable};
const ParamSpec kQ{"q", ParamRole::Variable};
const ParamSpec kM{"m", ParamRole::Auxiliary};
const ParamSpec kN{"n", ParamRole::Auxiliary};
const ParamSpec kAlpha{"alpha", ParamRole::SignedAuxiliary};
const ParamSpec kBeta{"beta", ParamRole::SignedAuxiliary};

/// Squares of the a/b binary forms F1..F14.
void add_plain_forms(std::vector<FormDef>& out) {
  const std::vector<ParamSpec> ab{kA, kB};
  const std::vector<ParamSpec> xy{kX, kY};

  auto product_zero = [](auto v, const auto&) { return v[0] * v[1] == 0; };
  auto b_zero = [](auto v, const auto&) { return v[1] == 0; };
  auto product_zero_or_equal = [](auto v, const auto&) { return v[0] * v[1] == 0 || v[0] == v[1]; };
  auto b_zero_or_equal = [](auto v, const auto&) { return v[1] == 0 || v[0] == v[1]; };
  auto equal = [](auto v, const auto&) { return v[0] == v[1]; };
  auto both_zero = [](auto v, const auto&) { return v[0] == 0 && v[1] == 0; };
  auto x_zero = [](auto v, const auto&) { return v[0] == 0; };

  out.push_back(make_form("F1", "F1", "a^4 + b^4", ab, {term(1, {4, 0}), term(1, {0, 4})},
                          "a*b = 0", {"I"},
                          [](auto v) { return pow4(v[0]) + pow4(v[1]); }, product_zero));
  out.push_back(make_form("F2", "F2", "a^4 - 4*b^4", ab, {term(1, {4, 0}), term(-4, {0, 4})},
                          "b = 0", {"II"},
                          [](auto v) { return pow4(v[0]) - 4 * pow4(v[1]); }, b_zero));
  out.push_back(make_form("F3", "F3", "4*a^4 - b^4", ab, {term(4, {4, 0}), term(-1, {0, 4})},
                          "b = 0", {"III"},
                          [](auto v) { return 4 * pow4(v[0]) - pow4(v[1]); }, b_zero));
  out.push_back(make_form("F4", "F4", "a*b*(a^2 + b^2)", ab, {term(1, {3, 1}), term(1, {1, 3})},
                          "a*b = 0", {"IV"},
                          [](auto v) { return v[0] * v[1] * (sq(v[0]) + sq(v[1])); }, product_zero));
  out.push_back(make_form("F5", "F5", "2*a*b*(a^2 - b^2)", ab,
                          {term(2, {3, 1}), term(-2, {1, 3})}, "a*b = 0 or a = b", {"V"},
                          [](auto v) { return 2 * v[0] * v[1] * (sq(v[0]) - sq(v[1])); },
                          product_zero_or_equal));
  out.push_back(make_form("F6", "F6", "a^4 - b^4", ab, {term(1, {4, 0}), term(-1, {0, 4})},
                          "b = 0 or a = b", {"VI"},
                          [](auto v) { return pow4(v[0]) - pow4(v[1]); }, b_zero_or_equal));
  out.push_back(make_form("F7", "F7", "4*a^4 + b^4", ab, {term(4, {4, 0}), term(1, {0, 4})},
                          "a*b = 0", {"VII"},
                          [](auto v) { return 4 * pow4(v[0]) + pow4(v[1]); }, product_zero));
  out.push_back(make_form("F8", "F8", "a*b*(a^2 - b^2)", ab, {term(1, {3, 1}), term(-1, {1, 3})},
                          "a*b = 0 or a = b", {"VIII"},
                          [](auto v) { return v[0] * v[1] * (sq(v[0]) - sq(v[1])); },
                          product_zero_or_equal));
  out.push_back(make_form("F9", "F9", "2*a*b*(a^2 + b^2)", ab, {term(2, {3, 1}), term(2, {1, 3})},
                          "a*b = 0 or a = b", {"IX"},
                          [](auto v) { return 2 * v[0] * v[1] * (sq(v[0]) + sq(v[1])); },
                          product_zero_or_equal));
  out.push_back(make_form("F10+", "F10", "2*a^4 + 2*b^4", ab, {term(2, {4, 0}), term(2, {0, 4})},
                          "a = b", {"X"},
                          [](auto v) { return 2 * pow4(v[0]) + 2 * pow4(v[1]); }, equal));
  out.push_back(make_form("F10-", "F10", "2*a^4 - 2*b^4", ab, {term(2, {4, 0}), term(-2, {0, 4})},
                          "a = b", {"X"},
                          [](auto v) { return 2 * pow4(v[0]) - 2 * pow4(v[1]); }, equal));
  out.push_back(make_form("F11", "F11", "a^4 + 2*b^4", ab, {term(1, {4, 0}), term(2, {0, 4})},
                          "b = 0", {},
                          [](auto v) { return pow4(v[0]) + 2 * pow4(v[1]); }, b_zero));
  out.push_back(make_form("F12", "F12", "a^4 - 6*a^2*b^2 + b^4", ab,
                          {term(1, {4, 0}), term(-6, {2, 2}), term(1, {0, 4})}, "a*b = 0", {},
                          [](auto v) { return pow4(v[0]) - 6 * sq(v[0] * v[1]) + pow4(v[1]); },
                          product_zero));
  out.push_back(make_form("F13", "F13", "a^4 + 6*a^2*b^2 + b^4", ab,
                          {term(1, {4, 0}), term(6, {2, 2}), term(1, {0, 4})}, "a*b = 0", {},
                          [](auto v) { return pow4(v[0]) + 6 * sq(v[0] * v[1]) + pow4(v[1]); },
                          product_zero));
  out.push_back(make_form("F14a", "F14", "8*y^4 - x^4", xy, {term(-1, {4, 0}), term(8, {0, 4})},
                          "x = y = 0", {},
                          [](auto v) { return 8 * pow4(v[1]) - pow4(v[0]); }, both_zero));
  out.push_back(make_form("F14b", "F14", "4*y^4 - 2*x^4", xy, {term(-2, {4, 0}), term(4, {0, 4})},
                          "x = 0", {},
                          [](auto v) { return 4 * pow4(v[1]) - 2 * pow4(v[0]); }, x_zero));
  out.push_back(make_form("F14c", "F14", "2*y^4 - 4*x^4", xy, {term(-4, {4, 0}), term(2, {0, 4})},
                          "x = y = 0", {},
                          [](auto v) { return 2 * pow4(v[1]) - 4 * pow4(v[0]); }, both_zero));
}

const char* const kBinaryException =
    "value = 0, or one variable is 0 and the other term's coefficient is a square";

/// m*a^4 - m^3*b^4 and relatives: c1(m, n)*a^4 + c2(m, n)*b^4.
template <typename C1, typename C2>
FormDef binary_family(std::string id, std::string family, std::string polynomial,
                      std::vector<ParamSpec> params, std::vector<Monomial> terms,
                      std::string exception, std::vector<std::string> aliases, C1 c1, C2 c2) {
  const std::size_t xi = params.size() - 2;
  return make_form(
      std::move(id), std::move(family), std::move(polynomial), std::move(params), std::move(terms),
      std::move(exception), std::move(aliases),
      [=](auto v) { return c1(v) * pow4(v[xi]) + c2(v) * pow4(v[xi + 1]); },
      [=](auto v, const auto& value) {
        using T = std::decay_t<decltype(value)>;
        return binary_quartic_degenerate<T>(c1(v), c2(v), v[xi], v[xi + 1], value);
      });
}

void add_parametric_forms(std::vector<FormDef>& out) {
  const std::vector<ParamSpec> mab{kM, kA, kB};
  const std::vector<ParamSpec> mnab{kM, kN, kA, kB};
  auto m = [](auto v) { return v[0]; };
  auto m3 = [](auto v) { return v[0] * v[0] * v[0]; };

  out.push_back(binary_family("F15a", "F15", "m*a^4 - m^3*b^4", mab,
                              {term(1, {1, 4, 0}), term(-1, {3, 0, 4})}, kBinaryException, {}, m,
                              [=](auto v) { return -m3(v); }));
  out.push_back(binary_family("F15b", "F15", "2*m*a^4 - 2*m^3*b^4", mab,
                              {term(2, {1, 4, 0}), term(-2, {3, 0, 4})}, kBinaryException, {},
                              [=](auto v) { return 2 * m(v); }, [=](auto v) { return -2 * m3(v); }));
  out.push_back(binary_family("F15c", "F15", "m*a^4 + m^3*b^4", mab,
                              {term(1, {1, 4, 0}), term(1, {3, 0, 4})}, kBinaryException, {}, m, m3));
  out.push_back(binary_family(
      "F15d", "F15", "2*m*a^4 + 2*m^3*b^4", mab, {term(2, {1, 4, 0}), term(2, {3, 0, 4})},
      std::string(kBinaryException) + ", or a^2 = m*b^2 (value 4*m^3*b^4)", {},
      [=](auto v) { return 2 * m(v); }, [=](auto v) { return 2 * m3(v); }));

  auto m3n = [](auto v) { return v[0] * v[0] * v[0] * v[1]; };
  auto mn3 = [](auto v) { return v[0] * v[1] * v[1] * v[1]; };
  out.push_back(binary_family("F15e", "F15", "m*n*(m^2*a^4 - n^2*b^4)", mnab,
                              {term(1, {3, 1, 4, 0}), term(-1, {1, 3, 0, 4})}, kBinaryException, {},
                              m3n, [=](auto v) { return -mn3(v); }));
  out.push_back(binary_family("F15f", "F15", "2*m*n*(m^2*a^4 - n^2*b^4)", mnab,
                              {term(2, {3, 1, 4, 0}), term(-2, {1, 3, 0, 4})}, kBinaryException,
                              {}, [=](auto v) { return 2 * m3n(v); },
                              [=](auto v) { return -2 * mn3(v); }));
}

void add_general_forms(std::vector<FormDef>& out) {
  const std::vector<ParamSpec> abxy{kAlpha, kBeta, kX, kY};
  auto a3b = [](auto v) { return v[0] * v[0] * v[0] * v[1]; };
  auto ab3 = [](auto v) { return v[0] * v[1] * v[1] * v[1]; };
  auto scaled = [](auto f, int s) { return [=](auto v) { return s * f(v); }; };

  struct Variant {
    const char* id;
    const char* polynomial;
    int s1;
    int s2;
    const char* extra_exception;
    const char* alias;
  };
  const Variant variants[] = {
      {"F16a", "alpha^3*beta*x^4 + alpha*beta^3*y^4", 1, 1, "", "general I"},
      {"F16b", "alpha^3*beta*x^4 - alpha*beta^3*y^4", 1, -1, "", "general II"},
      {"F16c", "alpha^3*beta*x^4 + 2*alpha*beta^3*y^4", 1, 2, "", "general III"},
      {"F16d", "2*alpha^3*beta*x^4 - 2*alpha*beta^3*y^4", 2, -2, "", "general IV"},
      {"F16e", "2*alpha^3*beta*x^4 + 2*alpha*beta^3*y^4", 2, 2,
       ", or alpha*x^2 = beta*y^2 (value 4*alpha^3*beta*x^4)", "general V"},
      {"F16f", "2*alpha^3*beta*x^4 - 4*alpha*beta^3*y^4", 2, -4, "", "general VI"},
  };
  for (const Variant& var : variants) {
    out.push_back(binary_family(var.id, "F16", var.polynomial, abxy,
                                {term(var.s1, {3, 1, 4, 0}), term(var.s2, {1, 3, 0, 4})},
                                std::string(kBinaryException) + var.extra_exception, {var.alias},
                                scaled(a3b, var.s1), scaled(ab3, var.s2)));
  }
}

/// k*n*(p^4 + 6*s*n*p^2*q^2 + n^2*q^4), s = +-1, k in {1, 2}.
FormDef trinomial_family(std::string id, std::string polynomial, int k, int s) {
  std::string exception = kBinaryException;
  if (k == 2 && s == 1) exception += ", or p^2 = n*q^2 (value 16*n^3*q^4)";
  return make_form(
      std::move(id), "F17", std::move(polynomial), {kN, kP, kQ},
      {term(k, {1, 4, 0}), term(6 * k * s, {2, 2, 2}), term(k, {3, 0, 4})}, std::move(exception),
      {},
      [=](auto v) {
        const auto& n = v[0];
        return k * n * (pow4(v[1]) + 6 * s * n * sq(v[1] * v[2]) + n * n * pow4(v[2]));
      },
      [=](auto v, const auto& value) {
        const auto& n = v[0];
        const auto& p = v[1];
        const auto& q = v[2];
        if (value == 0) return true;
        if (q == 0 && is_square(k * n)) return true;
        if (p == 0 && is_square(k * n * n * n)) return true;
        return p * p == n * q * q && is_square(k * n * n * n * (2 + 6 * s));
      });
}

void add_trinomial_forms(std::vector<FormDef>& out) {
  out.push_back(trinomial_family("F17a", "n*(p^4 + 6*n*p^2*q^2 + n^2*q^4)", 1, 1));
  out.push_back(trinomial_family("F17b", "n*(p^4 - 6*n*p^2*q^2 + n^2*q^4)", 1, -1));
  out.push_back(trinomial_family("F17c", "2*n*(p^4 + 6*n*p^2*q^2 + n^2*q^4)", 2, 1));
  out.push_back(trinomial_family("F17d", "2*n*(p^4 - 6*n*p^2*q^2 + n^2*q^4)", 2, -1));
}

nlohmann::json term_json(const Monomial& t, const std::vector<ParamSpec>& params) {
  nlohmann::json powers = nlohmann::json::object();
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (t.exponents[i] != 0) powers[params[i].name] = std::to_string(t.exponents[i]);
  }
  return {{"coefficient", t.coefficient.to_string()}, {"powers", powers}};
}

}  // namespace

std::string_view to_string(ParamRole role) {
  switch (role) {
    case ParamRole::Variable: return "variable";
    case ParamRole::Auxiliary: return "auxiliary";
    case ParamRole::SignedAuxiliary: return "signed_auxiliary";
  }
  return "?";
}

std::pair<std::size_t, std::size_t> FormDef::variable_indices() const {
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].role == ParamRole::Variable) found.push_back(i);
  }
  if (found.size() != 2) throw Error(ErrorCode::InvariantViolation, id + " needs two variables");
  return {found[0], found[1]};
}

Catalog::Catalog() {
  add_plain_forms(forms_);
  add_parametric_forms(forms_);
  add_general_forms(forms_);
  add_trinomial_forms(forms_);
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

const FormDef& Catalog::get(std::string_view id) const {
  for (const FormDef& f : forms_) {
    if (f.id == id) return f;
  }
  throw Error(ErrorCode::UnknownForm, std::string(id));
}

std::vector<const FormDef*> Catalog::resolve(std::string_view id) const {
  std::vector<const FormDef*> out;
  for (const FormDef& f : forms_) {
    if (f.id == id) return {&f};
    if (f.family == id) out.push_back(&f);
  }
  if (out.empty()) throw Error(ErrorCode::UnknownForm, std::string(id));
  return out;
}

nlohmann::json Catalog::manifest() const {
  nlohmann::json list = nlohmann::json::array();
  for (const FormDef& f : forms_) {
    nlohmann::json params = nlohmann::json::array();
    for (const ParamSpec& p : f.params) {
      params.push_back({{"name", p.name}, {"role", std::string(to_string(p.role))}});
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const Monomial& t : f.terms) terms.push_back(term_json(t, f.params));
    list.push_back({{"id", f.id},
                    {"family", f.family},
                    {"polynomial", f.polynomial},
                    {"arity", std::to_string(f.arity())},
                    {"params", params},
                    {"terms", terms},
                    {"exception", f.exception},
                    {"aliases", f.aliases}});
  }
  return list;
}

FormInstance evaluate(const FormDef& form, std::span<const Integer> ordered) {
  if (ordered.size() != form.arity()) {
    throw Error(ErrorCode::ArityMismatch, form.id + " takes " + std::to_string(form.arity()) +
                                              " parameters, got " + std::to_string(ordered.size()));
  }
  FormInstance inst;
  inst.form = form.id;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (form.params[i].role != ParamRole::SignedAuxiliary && ordered[i].sign() < 0) {
      throw Error(ErrorCode::InvalidArgument, form.params[i].name + " must be non-negative");
    }
    inst.params.emplace_back(form.params[i].name, ordered[i]);
  }
  inst.value = form.evaluate_exact(ordered);
  inst.is_square = is_square(inst.value);
  inst.is_exception = form.exception_exact(ordered, inst.value);
  return inst;
}

FormInstance evaluate(std::string_view form_id, const ParamMap& params) {
  const FormDef& form = Catalog::instance().get(form_id);
  std::vector<Integer> ordered;
  for (const ParamSpec& p : form.params) {
    auto it = params.find(p.name);
    if (it == params.end()) throw Error(ErrorCode::ArityMismatch, form.id + " missing " + p.name);
    ordered.push_back(it->second);
  }
  if (params.size() != form.arity()) {
    throw Error(ErrorCode::ArityMismatch, form.id + " takes " + std::to_string(form.arity()) +
                                              " parameters, got " + std::to_string(params.size()));
  }
  return evaluate(form, ordered);
}

}  // namespace quartic::forms
