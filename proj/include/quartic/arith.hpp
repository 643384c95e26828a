#pragma once

#include <span>
#include <vector>

#include <quartic/integer.hpp>
#include <quartic/rational.hpp>

/// Exact integer primitives: roots, power tests, gcd and coprime-power splitting.
namespace quartic {

Natural gcd(const Natural& a, const Natural& b);
bool coprime(const Natural& a, const Natural& b);

/// floor(sqrt(n)) by Newton iteration from above.
Natural isqrt(const Natural& n);

/// floor(n^(1/k)) for k >= 1.
Natural iroot(const Natural& n, unsigned k);

/// The k-th root of n when n is a perfect k-th power.
std::optional<Natural> exact_root(const Natural& n, unsigned k);

/// Quadratic-residue pre-check modulo 64, 63 and 65. A false result proves
/// n is not a square; a true result is inconclusive.
bool passes_square_residue_filter(const Natural& n);
bool passes_square_residue_filter(u128 n);

/// Negative values are never squares.
bool is_square(const Integer& n);
bool is_fourth_power(const Natural& n);

/// Splits a perfect k-th power with pairwise coprime factors into the k-th
/// roots of those factors.
///
/// Throws InvalidArgument for an empty list, a zero factor or k < 2;
/// NotPairwiseCoprime; NotAPower when the product is not a k-th power; and
/// FactorNotAPower if a factor of a coprime k-th power were not itself one,
/// which cannot happen for valid input.
std::vector<Natural> coprime_power_split(std::span<const Natural> factors, unsigned k);

/// 128-bit paths for the scanning hot loops. Same contracts as above.
namespace fast {

u128 isqrt(u128 n);
bool is_square(i128 n);
bool is_fourth_power(u128 n);

}  // namespace fast

/// Overload for the generic form evaluators.
inline bool is_square(i128 n) { return fast::is_square(n); }

}  // namespace quartic
