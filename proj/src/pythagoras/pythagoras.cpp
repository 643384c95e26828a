#include <quartic/pythagoras.hpp>

#include <optional>

namespace quartic {

namespace {

std::string pair_text(const Natural& a, const Natural& b) {
  return "(" + a.to_string() + ", " + b.to_string() + ")";
}

/// Root of n, or InvariantViolation: used where the algebra guarantees a square.
Natural forced_root(const Natural& n, const char* what) {
  Natural r = isqrt(n);
  if (r * r != n) {
    throw Error(ErrorCode::InvariantViolation, std::string(what) + " = " + n.to_string() +
                                                   " is not a square");
  }
  return r;
}

bool divides(unsigned d, const Natural& n) { return (n % Natural(d)).is_zero(); }

}  // namespace

bool GeneratorPair::valid() const {
  return q >= Natural(1) && p > q && coprime(p, q) && p.is_odd() != q.is_odd();
}

PrimitiveTriple compose_triple(const GeneratorPair& g) {
  if (!g.valid()) throw Error(ErrorCode::InvalidGenerator, pair_text(g.p, g.q));
  Natural pp = g.p * g.p;
  Natural qq = g.q * g.q;
  return PrimitiveTriple{pp - qq, Natural(2) * g.p * g.q, pp + qq, g};
}

GeneratorPair decompose_sum(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::Degenerate, pair_text(a, b));
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, pair_text(a, b));
  Natural sum = a * a + b * b;
  Natural c = isqrt(sum);
  if (c * c != sum) throw Error(ErrorCode::NotASquare, sum.to_string());
  if (a.is_odd() && b.is_odd()) throw Error(ErrorCode::BothOdd, pair_text(a, b));

  const Natural& odd = a.is_odd() ? a : b;
  // c + odd and c - odd are 2p^2 and 2q^2.
  GeneratorPair g{forced_root((c + odd) >> 1, "(c + a)/2"), forced_root((c - odd) >> 1, "(c - a)/2")};
  if (!g.valid()) throw Error(ErrorCode::InvariantViolation, "decomposed pair " + pair_text(g.p, g.q));
  return g;
}

std::string_view to_string(DiffBranch branch) {
  return branch == DiffBranch::OddB ? "OddB" : "EvenB";
}

DiffDecomposition decompose_diff(const Natural& a, const Natural& b) {
  if (a <= b) throw Error(ErrorCode::OrderViolation, pair_text(a, b));
  if (b.is_zero()) throw Error(ErrorCode::Degenerate, pair_text(a, b));
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, pair_text(a, b));
  Natural diff = a * a - b * b;
  Natural c = isqrt(diff);
  if (c * c != diff) throw Error(ErrorCode::NotASquare, diff.to_string());
  if (a.is_even()) throw Error(ErrorCode::AEven, pair_text(a, b));

  // a = p^2 + q^2; the odd one of b, c is p^2 - q^2.
  const DiffBranch branch = b.is_odd() ? DiffBranch::OddB : DiffBranch::EvenB;
  const Natural& odd_leg = branch == DiffBranch::OddB ? b : c;
  GeneratorPair g{forced_root((a + odd_leg) >> 1, "(a + odd leg)/2"),
                  forced_root((a - odd_leg) >> 1, "(a - odd leg)/2")};
  if (!g.valid()) throw Error(ErrorCode::InvariantViolation, "decomposed pair " + pair_text(g.p, g.q));
  return DiffDecomposition{std::move(g), branch};
}

std::string_view to_string(Member member) {
  switch (member) {
    case Member::A: return "a";
    case Member::B: return "b";
    case Member::C: return "c";
  }
  return "?";
}

DivisibilityReport divisibility_report(const PrimitiveTriple& t) {
  if (t.a * t.a + t.b * t.b != t.c * t.c) {
    throw Error(ErrorCode::InvariantViolation, "not a Pythagorean triple");
  }
  auto first_divisible = [&](unsigned d, bool include_c) -> std::optional<Member> {
    if (divides(d, t.a)) return Member::A;
    if (divides(d, t.b)) return Member::B;
    if (include_c && divides(d, t.c)) return Member::C;
    return std::nullopt;
  };
  auto div3 = first_divisible(3, false);
  auto div5 = first_divisible(5, true);
  if (!div3) throw Error(ErrorCode::InvariantViolation, "no leg divisible by 3");
  if (!divides(4, t.b)) throw Error(ErrorCode::InvariantViolation, "even leg not divisible by 4");
  if (!div5) throw Error(ErrorCode::InvariantViolation, "no member divisible by 5");
  return DivisibilityReport{*div3, Member::B, *div5};
}

}  // namespace quartic
