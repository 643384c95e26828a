#pragma once

#include <span>

#include <gmpxx.h>

#include <quartic/forms.hpp>

/// Deliberately plain re-evaluation for cross-checking the scan fast paths:
/// expanded monomials in raw GMP and mpz_sqrt/mpz_root, no residue filters.
namespace quartic::scan::naive {

mpz_class evaluate_terms(const forms::FormDef& form, std::span<const long long> params);

bool is_square(const mpz_class& n);
bool is_fourth_power(const mpz_class& n);

}  // namespace quartic::scan::naive
