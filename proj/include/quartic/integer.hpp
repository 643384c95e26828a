#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <quartic/error.hpp>

namespace quartic {

using i128 = __int128;
using u128 = unsigned __int128;

/// Machine integers of at most 64 bits; wider values go through from_i128.
template <typename T>
concept SmallIntegral = std::integral<T> && !std::same_as<T, bool> && sizeof(T) <= 8;

/// Signed arbitrary-precision integer. Division truncates toward zero.
class Integer {
 public:
  Integer() = default;

  template <SmallIntegral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(v);
    } else {
      value_ = static_cast<unsigned long>(v);
    }
  }

  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  static Integer from_i128(i128 v);
  static Integer from_u128(u128 v);

  /// Parses an optionally signed decimal string; throws InvalidArgument.
  static Integer parse(std::string_view text);

  std::string to_string() const { return value_.get_str(10); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  bool is_even() const { return !is_odd(); }
  Integer abs() const { return Integer(mpz_class(::abs(value_))); }
  Integer pow(unsigned long exponent) const;

  /// Number of bits of |value|; zero for zero.
  std::size_t bit_length() const;

  std::optional<i128> to_i128() const;
  std::optional<std::int64_t> to_int64() const;

  const mpz_class& mpz() const { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }

  Integer& operator+=(const Integer& rhs) { value_ += rhs.value_; return *this; }
  Integer& operator-=(const Integer& rhs) { value_ -= rhs.value_; return *this; }
  Integer& operator*=(const Integer& rhs) { value_ *= rhs.value_; return *this; }

  friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
  friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
  friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
  /// Truncating division; throws ZeroDenominator.
  friend Integer operator/(const Integer& lhs, const Integer& rhs);
  /// Remainder with the sign of the dividend.
  friend Integer operator%(const Integer& lhs, const Integer& rhs);

  friend bool operator==(const Integer& lhs, const Integer& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& lhs, const Integer& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  mpz_class value_;
};

/// Non-negative arbitrary-precision integer. Subtraction that would go below
/// zero throws NegativeNatural rather than wrapping.
class Natural {
 public:
  Natural() = default;

  template <SmallIntegral T>
  Natural(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw Error(ErrorCode::NegativeNatural, std::to_string(v));
    }
  }

  explicit Natural(const Integer& v);
  explicit Natural(mpz_class v) : Natural(Integer(std::move(v))) {}

  static Natural from_u128(u128 v) { return Natural(Integer::from_u128(v)); }
  static Natural parse(std::string_view text);

  operator const Integer&() const { return value_; }  // NOLINT(google-explicit-constructor)
  const Integer& as_integer() const { return value_; }

  std::string to_string() const { return value_.to_string(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_odd() const { return value_.is_odd(); }
  bool is_even() const { return value_.is_even(); }
  std::size_t bit_length() const { return value_.bit_length(); }
  Natural pow(unsigned long exponent) const { return Natural(value_.pow(exponent)); }
  std::optional<u128> to_u128() const;
  const mpz_class& mpz() const { return value_.mpz(); }

  Natural& operator+=(const Natural& rhs) { value_ += rhs.value_; return *this; }
  Natural& operator*=(const Natural& rhs) { value_ *= rhs.value_; return *this; }
  Natural& operator-=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator/(const Natural& lhs, const Natural& rhs) {
    return Natural(lhs.value_ / rhs.value_);
  }
  friend Natural operator%(const Natural& lhs, const Natural& rhs) {
    return Natural(lhs.value_ % rhs.value_);
  }
  friend Natural operator<<(const Natural& lhs, unsigned long bits);
  friend Natural operator>>(const Natural& lhs, unsigned long bits);

  friend bool operator==(const Natural& lhs, const Natural& rhs) = default;
  friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) {
    return lhs.value_ <=> rhs.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& v);

 private:
  Integer value_;
};

}  // namespace quartic
