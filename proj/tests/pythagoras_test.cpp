#include <gtest/gtest.h>

#include <quartic/error.hpp>
#include <quartic/pythagoras.hpp>

using namespace quartic;

namespace {

GeneratorPair gen(unsigned long p, unsigned long q) { return {Natural(p), Natural(q)}; }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Compose, Examples) {
  const PrimitiveTriple t = compose_triple(gen(2, 1));
  EXPECT_EQ(t.a, Natural(3));
  EXPECT_EQ(t.b, Natural(4));
  EXPECT_EQ(t.c, Natural(5));
  const PrimitiveTriple u = compose_triple(gen(3, 2));
  EXPECT_EQ(u.a, Natural(5));
  EXPECT_EQ(u.b, Natural(12));
  EXPECT_EQ(u.c, Natural(13));
}

TEST(Compose, RejectsInvalidGenerators) {
  EXPECT_EQ(code_of([] { compose_triple(gen(3, 1)); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { compose_triple(gen(4, 2)); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { compose_triple(gen(1, 2)); }), ErrorCode::InvalidGenerator);
  EXPECT_EQ(code_of([] { compose_triple(gen(1, 0)); }), ErrorCode::InvalidGenerator);
}

TEST(Decompose, Examples) {
  EXPECT_EQ(decompose_sum(Natural(3), Natural(4)), gen(2, 1));
  EXPECT_EQ(decompose_sum(Natural(4), Natural(3)), gen(2, 1));
  EXPECT_EQ(decompose_sum(Natural(12), Natural(5)), gen(3, 2));
  EXPECT_EQ(code_of([] { decompose_sum(Natural(0), Natural(1)); }), ErrorCode::Degenerate);
  EXPECT_EQ(code_of([] { decompose_sum(Natural(6), Natural(8)); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { decompose_sum(Natural(2), Natural(3)); }), ErrorCode::NotASquare);
  EXPECT_EQ(code_of([] { decompose_sum(Natural(1), Natural(1)); }), ErrorCode::NotASquare);
}

TEST(DecomposeDiff, Examples) {
  const DiffDecomposition odd = decompose_diff(Natural(5), Natural(3));
  EXPECT_EQ(odd.branch, DiffBranch::OddB);
  EXPECT_EQ(odd.gen, gen(2, 1));
  const DiffDecomposition even = decompose_diff(Natural(5), Natural(4));
  EXPECT_EQ(even.branch, DiffBranch::EvenB);
  EXPECT_EQ(even.gen, gen(2, 1));
  EXPECT_EQ(code_of([] { decompose_diff(Natural(3), Natural(5)); }), ErrorCode::OrderViolation);
  EXPECT_EQ(code_of([] { decompose_diff(Natural(3), Natural(0)); }), ErrorCode::Degenerate);
  EXPECT_EQ(code_of([] { decompose_diff(Natural(10), Natural(6)); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { decompose_diff(Natural(4), Natural(3)); }), ErrorCode::NotASquare);
}

TEST(Divisibility, Examples) {
  EXPECT_EQ(divisibility_report(compose_triple(gen(2, 1))),
            (DivisibilityReport{Member::A, Member::B, Member::C}));
  EXPECT_EQ(divisibility_report(compose_triple(gen(3, 2))),
            (DivisibilityReport{Member::B, Member::B, Member::A}));
}

TEST(Roundtrip, GeneratorsUpTo300) {
  for (unsigned long p = 2; p <= 300; ++p) {
    for (unsigned long q = 1; q < p; ++q) {
      const GeneratorPair g = gen(p, q);
      if (!g.valid()) continue;
      const PrimitiveTriple t = compose_triple(g);
      ASSERT_EQ(t.a * t.a + t.b * t.b, t.c * t.c);
      ASSERT_EQ(decompose_sum(t.a, t.b), g);
      ASSERT_EQ(decompose_sum(t.b, t.a), g);
      ASSERT_TRUE(g.p < t.a) << p << " " << q;
      ASSERT_TRUE(Natural(2) * g.p <= t.b);
      const DiffDecomposition odd = decompose_diff(t.c, t.a);
      ASSERT_EQ(odd.branch, DiffBranch::OddB);
      ASSERT_EQ(odd.gen, g);
      const DiffDecomposition even = decompose_diff(t.c, t.b);
      ASSERT_EQ(even.branch, DiffBranch::EvenB);
      ASSERT_EQ(even.gen, g);
      const DivisibilityReport d = divisibility_report(t);
      ASSERT_EQ(d.div4, Member::B);
    }
  }
}

TEST(Decompose, ExhaustiveLegsUpTo1000) {
  unsigned found = 0;
  for (unsigned long a = 1; a <= 1000; ++a) {
    for (unsigned long b = 1; b <= 1000; ++b) {
      if (!coprime(Natural(a), Natural(b))) continue;
      const Natural s = Natural(a * a + b * b);
      if (!is_square(s)) {
        ASSERT_EQ(code_of([&] { decompose_sum(Natural(a), Natural(b)); }), ErrorCode::NotASquare);
        continue;
      }
      ++found;
      const PrimitiveTriple t = compose_triple(decompose_sum(Natural(a), Natural(b)));
      ASSERT_TRUE((t.a == Natural(a) && t.b == Natural(b)) || (t.a == Natural(b) && t.b == Natural(a)));
    }
  }
  EXPECT_GT(found, 0u);
}
