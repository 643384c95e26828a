#pragma once

#include <string_view>

#include <quartic/arith.hpp>

namespace quartic {

/// Generator (p, q) of a primitive triple: p > q >= 1, coprime, opposite parity.
struct GeneratorPair {
  Natural p;
  Natural q;

  bool valid() const;
  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

/// a odd, b even, a^2 + b^2 = c^2 with a = p^2 - q^2, b = 2pq, c = p^2 + q^2.
struct PrimitiveTriple {
  Natural a;
  Natural b;
  Natural c;
  GeneratorPair gen;

  friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

/// Throws InvalidGenerator unless the pair is valid.
PrimitiveTriple compose_triple(const GeneratorPair& g);

/// Generator of the primitive triple with legs a and b, given in either order;
/// the odd leg is taken as p^2 - q^2.
///
/// Errors are checked in this order: Degenerate (a*b = 0), NotCoprime,
/// NotASquare (a^2 + b^2), BothOdd. BothOdd cannot fire after the square
/// check, since a sum of two odd squares is 2 mod 4.
GeneratorPair decompose_sum(const Natural& a, const Natural& b);

enum class DiffBranch { OddB, EvenB };

std::string_view to_string(DiffBranch branch);

struct DiffDecomposition {
  GeneratorPair gen;
  DiffBranch branch;

  friend bool operator==(const DiffDecomposition&, const DiffDecomposition&) = default;
};

/// For a > b coprime with a^2 - b^2 square: a = p^2 + q^2 and b = p^2 - q^2
/// (b odd) or b = 2pq (b even).
///
/// Throws OrderViolation (a <= b), Degenerate (b = 0), NotCoprime,
/// NotASquare, and AEven, which is unreachable: the larger of two coprime
/// squares with square difference is odd.
DiffDecomposition decompose_diff(const Natural& a, const Natural& b);

enum class Member { A, B, C };

std::string_view to_string(Member member);

struct DivisibilityReport {
  Member div3;
  Member div4;
  Member div5;

  friend bool operator==(const DivisibilityReport&, const DivisibilityReport&) = default;
};

/// Which member is divisible by 3 (a or b), by 4 (always b) and by 5 (a, b
/// or c). InvariantViolation when no member qualifies or the triple is malformed.
DivisibilityReport divisibility_report(const PrimitiveTriple& t);

}  // namespace quartic
