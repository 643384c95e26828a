#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <quartic/integer.hpp>

namespace quartic {

/// Exact fraction kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : numerator_(0), denominator_(1) {}
  Rational(const Integer& value) : numerator_(value), denominator_(1) {}  // NOLINT
  Rational(SmallIntegral auto value) : Rational(Integer(value)) {}        // NOLINT

  /// Reduces numerator/denominator; throws ZeroDenominator.
  static Rational normalize(const Integer& numerator, const Integer& denominator);

  const Integer& numerator() const { return numerator_; }
  const Natural& denominator() const { return denominator_; }

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_integer() const { return denominator_ == Natural(1); }
  int sign() const { return numerator_.sign(); }

  /// max(|numerator|, denominator).
  Natural height() const;

  /// True iff the value is the square of a rational.
  bool is_square() const;

  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  Rational(Integer numerator, Natural denominator)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {}

  Integer numerator_;
  Natural denominator_;
};

}  // namespace quartic
