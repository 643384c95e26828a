#include <quartic/rational.hpp>

#include <ostream>

#include <quartic/arith.hpp>

namespace quartic {

Rational Rational::normalize(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) {
    throw Error(ErrorCode::ZeroDenominator, numerator.to_string() + "/0");
  }
  if (numerator.is_zero()) return Rational();
  Natural g = gcd(Natural(numerator.abs()), Natural(denominator.abs()));
  Integer num = numerator / g;
  Integer den = denominator / g;
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), Natural(den));
}

Natural Rational::height() const {
  Natural magnitude(numerator_.abs());
  return magnitude > denominator_ ? magnitude : denominator_;
}

bool Rational::is_square() const {
  return quartic::is_square(numerator_) && quartic::is_square(denominator_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_.to_string();
  return numerator_.to_string() + "/" + denominator_.to_string();
}

Rational Rational::operator-() const { return Rational(-numerator_, denominator_); }

Rational operator+(const Rational& lhs, const Rational& rhs) {
  return Rational::normalize(lhs.numerator_ * rhs.denominator_ + rhs.numerator_ * lhs.denominator_,
                             lhs.denominator_ * rhs.denominator_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) { return lhs + (-rhs); }

Rational operator*(const Rational& lhs, const Rational& rhs) {
  return Rational::normalize(lhs.numerator_ * rhs.numerator_,
                             lhs.denominator_ * rhs.denominator_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero rational");
  return Rational::normalize(lhs.numerator_ * rhs.denominator_,
                             lhs.denominator_.as_integer() * rhs.numerator_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  return lhs.numerator_ * rhs.denominator_ <=> rhs.numerator_ * lhs.denominator_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace quartic
