#include <random>

#include <gtest/gtest.h>

#include <quartic/arith.hpp>
#include <quartic/error.hpp>

using namespace quartic;

namespace {

Natural nat(const char* text) { return Natural::parse(text); }

Natural random_natural(std::mt19937_64& rng, unsigned bits) {
  Natural n(0);
  for (unsigned done = 0; done < bits; done += 64) {
    n = (n << 64) + Natural::from_u128(rng());
  }
  return n >> ((bits + 63) / 64 * 64 - bits);
}

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

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(Natural(0)), Natural(0));
  EXPECT_EQ(isqrt(Natural(1)), Natural(1));
  EXPECT_EQ(isqrt(Natural(15)), Natural(3));
  EXPECT_EQ(isqrt(Natural(16)), Natural(4));
  EXPECT_EQ(isqrt(Natural(17)), Natural(4));
  EXPECT_EQ(isqrt(nat("100000000000000000000")), nat("10000000000"));
  EXPECT_EQ(isqrt(nat("99999999999999999999")), nat("9999999999"));
}

TEST(Isqrt, FloorPropertyUpTo256Bits) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const Natural n = random_natural(rng, 1 + static_cast<unsigned>(rng() % 256));
    const Natural r = isqrt(n);
    ASSERT_TRUE(r * r <= n) << n;
    ASSERT_TRUE(n < (r + Natural(1)) * (r + Natural(1))) << n;
  }
}

TEST(Isqrt, FastPathMatchesExact) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const u128 n = (static_cast<u128>(rng()) << 64 | rng()) >> (rng() % 128);
    ASSERT_EQ(Natural::from_u128(fast::isqrt(n)), isqrt(Natural::from_u128(n)));
  }
  const u128 max = ~static_cast<u128>(0);
  EXPECT_EQ(Natural::from_u128(fast::isqrt(max)), isqrt(Natural::from_u128(max)));
}

TEST(Iroot, Examples) {
  EXPECT_EQ(iroot(Natural(80), 4), Natural(2));
  EXPECT_EQ(iroot(Natural(81), 4), Natural(3));
  EXPECT_EQ(iroot(Natural(26), 3), Natural(2));
  EXPECT_EQ(exact_root(Natural(625), 4), Natural(5));
  EXPECT_FALSE(exact_root(Natural(36), 4).has_value());
}

TEST(Squares, Examples) {
  EXPECT_TRUE(is_square(Integer(0)));
  EXPECT_TRUE(is_square(Integer(1)));
  EXPECT_FALSE(is_square(Integer(2)));
  EXPECT_FALSE(is_square(Integer(-4)));
  EXPECT_TRUE(is_square(Integer(706).pow(2)));
  EXPECT_FALSE(is_square(Integer(706)));
  EXPECT_TRUE(is_fourth_power(Natural(16)));
  EXPECT_FALSE(is_fourth_power(Natural(36)));
  EXPECT_TRUE(fast::is_fourth_power(0));
  EXPECT_FALSE(fast::is_square(-1));
}

TEST(Squares, ResidueFilterNeverRejectsASquare) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000000; ++i) {
    const u128 n = rng() >> (rng() % 64);
    const bool exact = fast::isqrt(n) * fast::isqrt(n) == n;
    if (!passes_square_residue_filter(n)) ASSERT_FALSE(exact) << static_cast<unsigned long long>(n);
    ASSERT_EQ(fast::is_square(static_cast<i128>(n)), exact);
  }
  for (std::uint64_t r = 0; r < 100000; ++r) {
    ASSERT_TRUE(passes_square_residue_filter(static_cast<u128>(r) * r));
    ASSERT_TRUE(passes_square_residue_filter(Natural(r) * Natural(r)));
  }
}

TEST(Squares, BigAgreesWithFast) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t r = rng() >> 2;
    const u128 sq = static_cast<u128>(r) * r;
    ASSERT_TRUE(is_square(Integer::from_u128(sq)));
    if (r > 0) ASSERT_FALSE(is_square(Integer::from_u128(sq + 1)));
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(Natural(12), Natural(18)), Natural(6));
  EXPECT_EQ(gcd(Natural(0), Natural(5)), Natural(5));
  EXPECT_TRUE(coprime(Natural(8), Natural(15)));
  EXPECT_FALSE(coprime(Natural(0), Natural(2)));
}

TEST(CoprimePowerSplit, Examples) {
  const std::vector<Natural> squares{Natural(4), Natural(9), Natural(25)};
  EXPECT_EQ(coprime_power_split(squares, 2),
            (std::vector<Natural>{Natural(2), Natural(3), Natural(5)}));
  const std::vector<Natural> fourth{Natural(16), Natural(81)};
  EXPECT_EQ(coprime_power_split(fourth, 4), (std::vector<Natural>{Natural(2), Natural(3)}));
}

TEST(CoprimePowerSplit, Errors) {
  const std::vector<Natural> shared{Natural(4), Natural(4)};
  EXPECT_EQ(code_of([&] { coprime_power_split(shared, 2); }), ErrorCode::NotPairwiseCoprime);
  const std::vector<Natural> not_square{Natural(2), Natural(9)};
  EXPECT_EQ(code_of([&] { coprime_power_split(not_square, 2); }), ErrorCode::NotAPower);
  const std::vector<Natural> empty;
  EXPECT_EQ(code_of([&] { coprime_power_split(empty, 2); }), ErrorCode::InvalidArgument);
  const std::vector<Natural> zero{Natural(0), Natural(1)};
  EXPECT_EQ(code_of([&] { coprime_power_split(zero, 2); }), ErrorCode::InvalidArgument);
}

TEST(CoprimePowerSplit, RandomCoprimeSquares) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 2000; ++i) {
    const Natural x(1 + rng() % 100000);
    const Natural y(1 + rng() % 100000);
    if (!coprime(x, y)) continue;
    const std::vector<Natural> f{x * x, y * y};
    ASSERT_EQ(coprime_power_split(f, 2), (std::vector<Natural>{x, y}));
  }
}

TEST(Natural, RejectsNegative) {
  EXPECT_EQ(code_of([] { Natural(Integer(-1)); }), ErrorCode::NegativeNatural);
  EXPECT_EQ(code_of([] { Natural(1) - Natural(2); }), ErrorCode::NegativeNatural);
}

TEST(Integer, ParseAndPrint) {
  const Integer v = Integer::parse("-123456789012345678901234567890123456789012345");
  EXPECT_EQ(v.to_string(), "-123456789012345678901234567890123456789012345");
  EXPECT_EQ(v.to_i128(), std::nullopt);
  EXPECT_EQ(code_of([] { Integer::parse("12x"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Integer::parse(""); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(Integer::from_i128(-(static_cast<i128>(1) << 100)).to_i128(),
            -(static_cast<i128>(1) << 100));
}

TEST(Rational, Normalize) {
  const Rational r = Rational::normalize(Integer(6), Integer(-8));
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Natural(4));
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ(Rational::normalize(Integer(4), Integer(2)).to_string(), "2");
  EXPECT_EQ(code_of([] { Rational::normalize(Integer(1), Integer(0)); }), ErrorCode::ZeroDenominator);
}

TEST(Rational, SquaresAndHeight) {
  EXPECT_TRUE(Rational::normalize(Integer(9), Integer(4)).is_square());
  EXPECT_FALSE(Rational::normalize(Integer(9), Integer(2)).is_square());
  EXPECT_FALSE(Rational::normalize(Integer(-1), Integer(4)).is_square());
  EXPECT_EQ(Rational::normalize(Integer(-7), Integer(3)).height(), Natural(7));
  const Rational two = Rational::normalize(Integer(2), Integer(1));
  EXPECT_EQ((two * two * two + Rational(1)).to_string(), "9");
}
