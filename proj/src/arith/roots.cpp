#include <quartic/arith.hpp>

#include <array>
#include <bit>

namespace quartic {

namespace {

template <unsigned Modulus>
constexpr std::array<bool, Modulus> square_residues() {
  std::array<bool, Modulus> table{};
  for (unsigned r = 0; r < Modulus; ++r) table[(r * r) % Modulus] = true;
  return table;
}

constexpr auto kResidues64 = square_residues<64>();
constexpr auto kResidues63 = square_residues<63>();
constexpr auto kResidues65 = square_residues<65>();

bool residues_allow(unsigned r64, unsigned r63, unsigned r65) {
  return kResidues64[r64] && kResidues63[r63] && kResidues65[r65];
}

unsigned bit_width(u128 n) {
  const auto high = static_cast<std::uint64_t>(n >> 64);
  if (high != 0) return 64 + std::bit_width(high);
  return std::bit_width(static_cast<std::uint64_t>(n));
}

std::uint64_t isqrt64(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  while (true) {
    std::uint64_t y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class out;
  mpz_gcd(out.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(out));
}

bool coprime(const Natural& a, const Natural& b) { return gcd(a, b) == Natural(1); }

Natural isqrt(const Natural& n) {
  if (n < Natural(2)) return n;
  Natural x = Natural(1) << ((n.bit_length() + 1) / 2);
  while (true) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

Natural iroot(const Natural& n, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "zeroth root");
  if (k == 1 || n < Natural(2)) return n;
  if (k == 2) return isqrt(n);
  const Natural order(k);
  const Natural below(k - 1);
  Natural x = Natural(1) << ((n.bit_length() + k - 1) / k);
  while (true) {
    Natural y = (below * x + n / x.pow(k - 1)) / order;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Natural> exact_root(const Natural& n, unsigned k) {
  Natural r = iroot(n, k);
  if (r.pow(k) == n) return r;
  return std::nullopt;
}

bool passes_square_residue_filter(const Natural& n) {
  mpz_srcptr z = n.mpz().get_mpz_t();
  return residues_allow(static_cast<unsigned>(mpz_fdiv_ui(z, 64)),
                        static_cast<unsigned>(mpz_fdiv_ui(z, 63)),
                        static_cast<unsigned>(mpz_fdiv_ui(z, 65)));
}

bool passes_square_residue_filter(u128 n) {
  return residues_allow(static_cast<unsigned>(n & 63u), static_cast<unsigned>(n % 63u),
                        static_cast<unsigned>(n % 65u));
}

bool is_square(const Integer& n) {
  if (n.sign() < 0) return false;
  Natural value(n);
  if (!passes_square_residue_filter(value)) return false;
  Natural r = isqrt(value);
  return r * r == value;
}

bool is_fourth_power(const Natural& n) {
  Natural r = isqrt(n);
  if (r * r != n) return false;
  Natural s = isqrt(r);
  return s * s == r;
}

std::vector<Natural> coprime_power_split(std::span<const Natural> factors, unsigned k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "exponent must be at least 2");
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty factor list");
  for (const Natural& f : factors) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero factor");
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (!coprime(factors[i], factors[j])) {
        throw Error(ErrorCode::NotPairwiseCoprime,
                    factors[i].to_string() + " and " + factors[j].to_string());
      }
    }
  }
  Natural product(1);
  for (const Natural& f : factors) product *= f;
  if (!exact_root(product, k)) {
    throw Error(ErrorCode::NotAPower, product.to_string() + " is not a perfect power of order " +
                                          std::to_string(k));
  }
  std::vector<Natural> roots;
  roots.reserve(factors.size());
  for (const Natural& f : factors) {
    auto root = exact_root(f, k);
    if (!root) throw Error(ErrorCode::FactorNotAPower, f.to_string());
    roots.push_back(std::move(*root));
  }
  return roots;
}

namespace fast {

u128 isqrt(u128 n) {
  if (n >> 64 == 0) return isqrt64(static_cast<std::uint64_t>(n));
  u128 x = u128{1} << ((bit_width(n) + 1) / 2);
  while (true) {
    u128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

bool is_square(i128 n) {
  if (n < 0) return false;
  const auto value = static_cast<u128>(n);
  if (!passes_square_residue_filter(value)) return false;
  u128 r = isqrt(value);
  return r * r == value;
}

bool is_fourth_power(u128 n) {
  if (!passes_square_residue_filter(n)) return false;
  u128 r = isqrt(n);
  if (r * r != n) return false;
  u128 s = isqrt(r);
  return s * s == r;
}

}  // namespace fast

}  // namespace quartic
