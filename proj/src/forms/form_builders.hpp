#pragma once

#include <type_traits>
#include <utility>

#include <quartic/forms.hpp>

namespace quartic::forms::detail {

template <typename T>
T sq(const T& x) {
  return x * x;
}

template <typename T>
T pow4(const T& x) {
  return sq(sq(x));
}

inline Monomial term(Integer coefficient, std::vector<unsigned> exponents) {
  return Monomial{std::move(coefficient), std::move(exponents)};
}

/// Instantiates one generic polynomial and one generic exception predicate
/// for both the exact and the 128-bit paths.
template <typename Poly, typename Exc>
FormDef make_form(std::string id, std::string family, std::string polynomial,
                  std::vector<ParamSpec> params, std::vector<Monomial> terms, std::string exception,
                  std::vector<std::string> aliases, Poly poly, Exc exc) {
  FormDef f;
  f.id = std::move(id);
  f.family = std::move(family);
  f.polynomial = std::move(polynomial);
  f.params = std::move(params);
  f.terms = std::move(terms);
  f.exception = std::move(exception);
  f.aliases = std::move(aliases);
  f.evaluate_exact = [poly](std::span<const Integer> v) -> Integer { return poly(v); };
  f.evaluate_fast = [poly](std::span<const i128> v) -> i128 { return poly(v); };
  f.exception_exact = [exc](std::span<const Integer> v, const Integer& value) {
    return exc(v, value);
  };
  f.exception_fast = [exc](std::span<const i128> v, const i128& value) { return exc(v, value); };
  return f;
}

}  // namespace quartic::forms::detail
