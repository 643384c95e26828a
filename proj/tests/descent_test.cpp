#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <quartic/descent.hpp>
#include <quartic/error.hpp>

using namespace quartic;
using namespace quartic::descent;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

Natural N(unsigned long v) { return Natural(v); }

/// Checks the shape every outcome must have and returns it.
const DescentOutcome& well_formed(const DescentOutcome& o) {
  EXPECT_FALSE(o.trace.empty());
  switch (o.tag) {
    case Tag::Reduced:
      EXPECT_TRUE(o.reduced.has_value());
      break;
    case Tag::Exception:
      EXPECT_TRUE(o.exception_name.has_value());
      EXPECT_FALSE(o.violated.has_value());
      break;
    case Tag::Contradiction:
      EXPECT_TRUE(o.violated.has_value());
      if (o.violated) EXPECT_FALSE(condition_holds(*o.violated, o.merged_bindings())) << *o.violated;
      break;
  }
  return o;
}

}  // namespace

TEST(SumOfFourthPowers, Examples) {
  const DescentOutcome o = well_formed(descend_sum_of_fourth_powers(N(5), N(3)));
  EXPECT_EQ(o.tag, Tag::Contradiction);
  EXPECT_EQ(o.violated, "sum4.square");
  EXPECT_EQ(condition("sum4.square").failure, "a^4+b^4 not a perfect square");

  const DescentOutcome zero = well_formed(descend_sum_of_fourth_powers(N(0), N(1)));
  EXPECT_EQ(zero.tag, Tag::Exception);
  EXPECT_EQ(zero.exception_name, "vanishing term");

  EXPECT_EQ(well_formed(descend_sum_of_fourth_powers(N(1), N(1))).tag, Tag::Contradiction);
  EXPECT_EQ(code_of([] { descend_sum_of_fourth_powers(N(2), N(4)); }), ErrorCode::NotCoprime);
}

TEST(DifferenceOfFourthPowers, Examples) {
  const DescentOutcome o = well_formed(descend_difference_of_fourth_powers(N(5), N(3)));
  EXPECT_EQ(o.tag, Tag::Contradiction);
  EXPECT_EQ(o.violated, "diff4.square");
  EXPECT_EQ(well_formed(descend_difference_of_fourth_powers(N(7), N(0))).exception_name, "b = 0");
  EXPECT_EQ(well_formed(descend_difference_of_fourth_powers(N(1), N(1))).exception_name, "a = b");
  EXPECT_EQ(code_of([] { descend_difference_of_fourth_powers(N(3), N(5)); }),
            ErrorCode::OrderViolation);
  EXPECT_EQ(code_of([] { descend_difference_of_fourth_powers(N(6), N(4)); }),
            ErrorCode::NotCoprime);
}

TEST(FourthPowerPlusDouble, Examples) {
  const DescentOutcome o = well_formed(descend_fourth_power_plus_double(N(1), N(2)));
  EXPECT_EQ(o.tag, Tag::Contradiction);
  EXPECT_EQ(o.violated, "plus2.square");
  EXPECT_EQ(well_formed(descend_fourth_power_plus_double(N(1), N(0))).exception_name, "b = 0");
  EXPECT_EQ(code_of([] { descend_fourth_power_plus_double(N(2), N(2)); }), ErrorCode::NotCoprime);
}

TEST(CubeForm, Examples) {
  const DescentOutcome eight = well_formed(reduce_cube_form(N(1), N(3)));
  EXPECT_EQ(eight.tag, Tag::Exception);
  EXPECT_EQ(eight.exception_name, "cube 8 case");
  EXPECT_EQ(well_formed(reduce_cube_form(N(1), N(1))).exception_name, "a = 0 degenerate");
  EXPECT_EQ(well_formed(reduce_cube_form(N(0), N(1))).exception_name, "b = 0 degenerate");

  const DescentOutcome o = well_formed(reduce_cube_form(N(1), N(5)));
  EXPECT_EQ(o.tag, Tag::Contradiction);
  EXPECT_EQ(o.violated, "cube.square");
  EXPECT_EQ(cube_form_value(Integer(1), Integer(5)), Integer(65));
  EXPECT_EQ(cube_form_value(Integer(1), Integer(3)), Integer(9));

  EXPECT_EQ(code_of([] { reduce_cube_form(N(1), N(0)); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { reduce_cube_form(N(2), N(4)); }), ErrorCode::NotCoprime);
}

TEST(CubeForm, ValueMatchesCubePlusOne) {
  // b^4 ((a/b)^3 + 1) = b*c*(c^2 - 3bc + 3b^2) with c = a + b.
  for (long b = 1; b <= 30; ++b) {
    for (long a = 0; a <= 30; ++a) {
      const Integer bi(b), ai(a);
      EXPECT_EQ(cube_form_value(bi, ai + bi), ai.pow(3) * bi + bi.pow(4));
    }
  }
}

TEST(Conditions, RegistryAndReevaluation) {
  EXPECT_GE(conditions().size(), 15u);
  for (const Condition& c : conditions()) EXPECT_FALSE(c.failure.empty()) << c.id;
  EXPECT_EQ(code_of([] { condition("nope"); }), ErrorCode::InvalidArgument);

  const Bindings square{{"a", Integer(0)}, {"b", Integer(3)}};
  EXPECT_TRUE(condition_holds("sum4.square", square));
  const Bindings not_square{{"a", Integer(1)}, {"b", Integer(2)}};
  EXPECT_FALSE(condition_holds("sum4.square", not_square));
  EXPECT_TRUE(condition_holds("diff4.square", Bindings{{"a", Integer(5)}, {"b", Integer(4)}}) ==
              is_square(Integer(625 - 256)));
  EXPECT_TRUE(condition_holds("plus2.square", Bindings{{"a", Integer(1)}, {"b", Integer(0)}}));
  EXPECT_TRUE(condition_holds("cube.square", Bindings{{"b", Integer(1)}, {"c", Integer(3)}}));
  EXPECT_EQ(code_of([] { condition_holds("sum4.square", Bindings{{"a", Integer(1)}}); }),
            ErrorCode::InvalidArgument);
}

TEST(Descent, NoReductionForCoprimePairsUpTo300) {
  for (unsigned long a = 0; a <= 300; ++a) {
    for (unsigned long b = 0; b <= 300; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const DescentOutcome s = well_formed(descend_sum_of_fourth_powers(N(a), N(b)));
      ASSERT_NE(s.tag, Tag::Reduced) << a << " " << b;
      if (s.tag == Tag::Exception) ASSERT_EQ(a * b, 0u);

      const DescentOutcome p = well_formed(descend_fourth_power_plus_double(N(a), N(b)));
      ASSERT_NE(p.tag, Tag::Reduced) << a << " " << b;
      if (p.tag == Tag::Exception) ASSERT_EQ(b, 0u);

      if (a >= b) {
        const DescentOutcome d = well_formed(descend_difference_of_fourth_powers(N(a), N(b)));
        ASSERT_NE(d.tag, Tag::Reduced) << a << " " << b;
        if (d.tag == Tag::Exception) ASSERT_TRUE(b == 0 || a == b);
      }

      if (b >= 1) {
        const DescentOutcome c = well_formed(reduce_cube_form(N(a), N(b)));
        ASSERT_NE(c.tag, Tag::Reduced) << a << " " << b;
        if (c.tag == Tag::Exception) ASSERT_TRUE(a == 0 || a == b || b == 3 * a);
      }
    }
  }
}

TEST(Halves, Examples) {
  const HalvesReport r = check_halves_identities(N(5), N(3));
  EXPECT_TRUE(r.doubled_sum_identity);
  EXPECT_EQ(r.half_sum, N(17));
  EXPECT_EQ(r.half_diff, N(8));
  EXPECT_TRUE(r.halves_coprime);
  EXPECT_EQ(r.lower_half, N(1));
  EXPECT_EQ(r.upper_half, N(4));
  EXPECT_EQ(r.p, N(1));
  EXPECT_EQ(r.q, N(2));
  EXPECT_EQ(r.fourth_power_identity, true);

  const HalvesReport s = check_halves_identities(N(7), N(3));
  EXPECT_FALSE(s.p.has_value() && s.q.has_value());
  EXPECT_FALSE(s.fourth_power_identity.has_value());

  EXPECT_EQ(code_of([] { check_halves_identities(N(4), N(3)); }), ErrorCode::ParityViolation);
  EXPECT_EQ(code_of([] { check_halves_identities(N(3), N(5)); }), ErrorCode::OrderViolation);
  EXPECT_EQ(code_of([] { check_halves_identities(N(9), N(3)); }), ErrorCode::NotCoprime);
}

TEST(Halves, AllOddCoprimePairs) {
  for (unsigned long a = 3; a <= 201; a += 2) {
    for (unsigned long b = 1; b < a; b += 2) {
      if (std::gcd(a, b) != 1) continue;
      const HalvesReport r = check_halves_identities(N(a), N(b));
      ASSERT_TRUE(r.doubled_sum_identity);
      ASSERT_TRUE(r.halves_coprime);
      ASSERT_TRUE(r.half_sum.is_odd());
      ASSERT_TRUE(r.half_diff.is_even());
      if (r.fourth_power_identity) ASSERT_TRUE(*r.fourth_power_identity);
    }
  }
}

TEST(Identities, RandomPoints) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Integer x(dist(rng)), y(dist(rng)), z(dist(rng));
    ASSERT_TRUE(pythagorean_parametrization(x, y).holds());
    ASSERT_TRUE(doubled_sum_decomposition(x, y).holds());
    ASSERT_TRUE(minus_six_decomposition(x, y).holds());
    ASSERT_TRUE(plus_six_decomposition(x, y).holds());
    ASSERT_TRUE(cube_tu_substitution(x, y).holds());
    ASSERT_TRUE(mixed_square_sum(x, y, z).holds());
    ASSERT_TRUE(cube_root_parametrization(x, y).holds());
  }
  EXPECT_EQ(pythagorean_parametrization(Integer(2), Integer(1)).lhs, Integer(25));
  EXPECT_FALSE(pythagorean_parametrization(Integer(2), Integer(1)).name.empty());
}
