#include <numeric>

#include "engine.hpp"
#include "naive_oracle.hpp"

namespace quartic::scan {

using detail::Axis;
using detail::TupleCursor;
using forms::FormDef;
using forms::ParamRole;

namespace {

Integer to_integer(const Integer& v) { return v; }
Integer to_integer(i128 v) { return Integer::from_i128(v); }

template <typename T>
T from_ll(long long v) {
  if constexpr (std::is_same_v<T, Integer>) {
    return Integer(v);
  } else {
    return static_cast<T>(v);
  }
}

std::vector<Axis> axes_for(const FormDef& form, std::uint64_t bound, std::uint64_t family_bound) {
  const auto b = static_cast<long long>(bound);
  const auto fb = static_cast<long long>(family_bound);
  std::vector<Axis> axes;
  for (const auto& p : form.params) {
    switch (p.role) {
      case ParamRole::Variable: axes.push_back({0, b}); break;
      case ParamRole::Auxiliary: axes.push_back({1, fb}); break;
      case ParamRole::SignedAuxiliary: axes.push_back({-fb, fb, true}); break;
    }
  }
  return axes;
}

/// True when every monomial, and hence every intermediate of the evaluators,
/// stays well inside 128 bits over the box.
bool fits_fast(const FormDef& form, const std::vector<Axis>& axes) {
  Integer total = 0;
  for (const auto& t : form.terms) {
    Integer magnitude = t.coefficient.abs();
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const long long m = std::max(std::llabs(axes[i].lo), std::llabs(axes[i].hi));
      magnitude *= Integer(m).pow(t.exponents[i]);
    }
    total += magnitude;
  }
  return total.bit_length() <= 120;
}

bool square_test(const Integer& v) { return is_square(v); }
bool square_test(i128 v) { return fast::is_square(v); }

template <typename T>
void scan_range(const FormDef& form, const forms::Evaluator<T>& eval,
                const forms::ExceptionPredicate<T>& exception, TupleCursor cursor,
                std::uint64_t begin, std::uint64_t end, bool coprime_only, ClaimResult& part) {
  const auto [xi, yi] = form.variable_indices();
  cursor.seek(begin);
  std::vector<T> v(form.arity());
  for (std::uint64_t idx = begin; idx < end; ++idx, cursor.advance()) {
    const std::vector<long long>& vals = cursor.values();
    if (coprime_only && std::gcd(vals[xi], vals[yi]) != 1) continue;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = from_ll<T>(vals[i]);
    ++part.candidates_tested;
    const T value = eval(v);
    const bool sq = !(value < 0) && square_test(value);
    const bool ex = exception(v, value);
    std::vector<Integer> params;
    if (sq || ex || detail::oracle_selected(idx)) {
      for (long long x : vals) params.emplace_back(x);
    }
    if (sq || ex) {
      part.hits.push_back(
          Hit{params, to_integer(value).to_string(), detail::join_params(vals), sq, ex});
    }
    if (!detail::oracle_selected(idx)) continue;

    ++part.oracle_samples;
    const mpz_class naive_value = naive::evaluate_terms(form, vals);
    const bool naive_sq = naive::is_square(naive_value);
    const Integer exact_value(naive_value);
    const bool exact_ex = form.exception_exact(params, exact_value);
    if (to_integer(value) != exact_value || naive_sq != sq || exact_ex != ex) {
      ++part.oracle_mismatches;
      detail::note_mismatch(part, form.id + " at " + detail::join_params(vals) + ": fast " +
                                      to_integer(value).to_string() + " naive " +
                                      exact_value.to_string());
    }
  }
}

}  // namespace

ClaimResult scan_form(const FormDef& form, std::uint64_t bound, bool coprime_only,
                      std::uint64_t family_bound, unsigned workers) {
  const std::vector<Axis> axes = axes_for(form, bound, family_bound);
  const TupleCursor cursor(axes);
  ClaimResult proto;
  proto.name = form.id;
  for (const auto& p : form.params) proto.param_names.push_back(p.name);

  if (fits_fast(form, axes)) {
    return detail::run_chunks(cursor.total(), workers, proto,
                              [&](std::uint64_t begin, std::uint64_t end, ClaimResult& part) {
                                scan_range<i128>(form, form.evaluate_fast, form.exception_fast,
                                                 cursor, begin, end, coprime_only, part);
                              });
  }
  return detail::run_chunks(cursor.total(), workers, proto,
                            [&](std::uint64_t begin, std::uint64_t end, ClaimResult& part) {
                              scan_range<Integer>(form, form.evaluate_exact, form.exception_exact,
                                                  cursor, begin, end, coprime_only, part);
                            });
}

ScanReport verify_form(std::string_view form_id, const Natural& bound, bool coprime_only,
                       const Natural& family_bound, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto targets = forms::Catalog::instance().resolve(form_id);
  const std::uint64_t b = detail::to_u64(bound, "bound");
  const std::uint64_t fb = detail::to_u64(family_bound, "family bound");
  if (b < 1 || fb < 1) throw Error(ErrorCode::InvalidArgument, "bounds must be at least 1");

  ScanReport report;
  report.target = std::string(form_id);
  report.bounds = {{"bound", bound.to_string()},
                   {"family_bound", family_bound.to_string()},
                   {"coprime_only", coprime_only ? "true" : "false"}};
  for (const FormDef* f : targets) {
    report.claims.push_back(scan_form(*f, b, coprime_only, fb, options.workers));
  }
  report.config_hash = detail::report_hash("verify", report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace quartic::scan
