#include <quartic/integer.hpp>

#include <ostream>

namespace quartic {

namespace {

constexpr int kLimbBits = 64;

bool is_decimal_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Integer Integer::from_u128(u128 v) {
  mpz_class high(static_cast<unsigned long>(v >> kLimbBits));
  mpz_class low(static_cast<unsigned long>(v));
  mpz_class out = high;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), kLimbBits);
  out += low;
  return Integer(std::move(out));
}

Integer Integer::from_i128(i128 v) {
  if (v >= 0) return from_u128(static_cast<u128>(v));
  // -(v + 1) + 1 avoids overflow at the minimum value.
  return -(from_u128(static_cast<u128>(-(v + 1))) + Integer(1));
}

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_decimal_digits(digits)) {
    throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
  }
  mpz_class value(std::string(digits), 10);
  if (negative) value = -value;
  return Integer(std::move(value));
}

Integer Integer::pow(unsigned long exponent) const {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), exponent);
  return Integer(std::move(out));
}

std::size_t Integer::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::optional<i128> Integer::to_i128() const {
  if (bit_length() > 126) return std::nullopt;
  mpz_class magnitude = ::abs(value_);
  mpz_class high;
  mpz_fdiv_q_2exp(high.get_mpz_t(), magnitude.get_mpz_t(), kLimbBits);
  mpz_class low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), magnitude.get_mpz_t(), kLimbBits);
  u128 m = (static_cast<u128>(high.get_ui()) << kLimbBits) | low.get_ui();
  i128 out = static_cast<i128>(m);
  return sign() < 0 ? -out : out;
}

std::optional<std::int64_t> Integer::to_int64() const {
  if (!value_.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value_.get_si());
}

Integer operator/(const Integer& lhs, const Integer& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  mpz_class out;
  mpz_tdiv_q(out.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return Integer(std::move(out));
}

Integer operator%(const Integer& lhs, const Integer& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::ZeroDenominator, "remainder by zero");
  mpz_class out;
  mpz_tdiv_r(out.get_mpz_t(), lhs.value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return Integer(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Natural::Natural(const Integer& v) : value_(v) {
  if (v.sign() < 0) throw Error(ErrorCode::NegativeNatural, v.to_string());
}

Natural Natural::parse(std::string_view text) {
  if (!is_decimal_digits(text)) {
    throw Error(ErrorCode::InvalidArgument, "not a natural number: '" + std::string(text) + "'");
  }
  return Natural(Integer::parse(text));
}

std::optional<u128> Natural::to_u128() const {
  if (bit_length() > 128) return std::nullopt;
  mpz_class high;
  mpz_fdiv_q_2exp(high.get_mpz_t(), mpz().get_mpz_t(), kLimbBits);
  mpz_class low;
  mpz_fdiv_r_2exp(low.get_mpz_t(), mpz().get_mpz_t(), kLimbBits);
  return (static_cast<u128>(high.get_ui()) << kLimbBits) | low.get_ui();
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (rhs > *this) {
    throw Error(ErrorCode::NegativeNatural, to_string() + " - " + rhs.to_string());
  }
  value_ -= rhs.value_;
  return *this;
}

Natural operator<<(const Natural& lhs, unsigned long bits) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), lhs.mpz().get_mpz_t(), bits);
  return Natural(std::move(out));
}

Natural operator>>(const Natural& lhs, unsigned long bits) {
  mpz_class out;
  mpz_fdiv_q_2exp(out.get_mpz_t(), lhs.mpz().get_mpz_t(), bits);
  return Natural(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.to_string(); }

}  // namespace quartic
