#include <algorithm>
#include <numeric>

#include "engine.hpp"
#include "naive_oracle.hpp"

namespace quartic::scan {

using detail::Axis;

namespace {

bool listed(const std::vector<std::string>& values, const std::string& v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

ClaimResult prototype(std::string name, std::vector<std::string> params,
                      std::vector<std::string> expected) {
  ClaimResult c;
  c.name = std::move(name);
  c.param_names = std::move(params);
  c.expected = std::move(expected);
  return c;
}

std::string u128_text(u128 v) { return Integer::from_u128(v).to_string(); }
std::string mpz_text(const mpz_class& v) { return v.get_str(10); }

/// One-variable claim: found(x) tells whether x is a solution, naive(x) re-checks it.
template <typename Fast, typename Naive>
ClaimResult single_scan(ClaimResult proto, long long lo, long long hi, unsigned workers, Fast found,
                        Naive naive_found) {
  return detail::scan_box(
      proto, {Axis{lo, hi}}, workers,
      [&](std::uint64_t idx, const std::vector<long long>& vals, ClaimResult& part) {
        const long long x = vals[0];
        ++part.candidates_tested;
        const auto [hit, value] = found(x);
        const std::string solution = std::to_string(x);
        if (hit) {
          part.hits.push_back(
              Hit{{Integer(x)}, value, solution, true, listed(part.expected, solution)});
        }
        if (!detail::oracle_selected(idx)) return;
        ++part.oracle_samples;
        const auto [naive_hit, naive_value] = naive_found(x);
        if (naive_hit != hit || naive_value != value) {
          ++part.oracle_mismatches;
          detail::note_mismatch(part, part.name + " at " + solution);
        }
      });
}

mpz_class mpz_of(long long x) { return mpz_class(static_cast<long>(x)); }

}  // namespace

ScanReport scan_triangular(const Natural& max_x, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto hi = static_cast<long long>(detail::to_u64(max_x, "max_x"));
  ScanReport report;
  report.target = "triangular";
  report.bounds = {{"max_x", max_x.to_string()}};

  ClaimResult proto = prototype("x(x+1)/2 fourth power", {"x"}, {"0", "1"});
  report.claims.push_back(single_scan(
      proto, 0, hi, options.workers,
      [](long long x) {
        const u128 t = static_cast<u128>(x) * static_cast<u128>(x + 1) / 2;
        return std::pair{fast::is_fourth_power(t), u128_text(t)};
      },
      [](long long x) {
        const mpz_class t = mpz_of(x) * (mpz_of(x) + 1) / 2;
        return std::pair{naive::is_fourth_power(t), mpz_text(t)};
      }));
  report.config_hash = detail::report_hash("scan-triangular", report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

ScanReport scan_pell_corollaries(const Natural& max, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto hi = static_cast<long long>(detail::to_u64(max, "max"));
  ScanReport report;
  report.target = "pell";
  report.bounds = {{"max", max.to_string()}};

  // 8y^4 + 1 needs 4*log2(y) + 3 bits.
  const bool fast_ok = hi < (1LL << 29);
  report.claims.push_back(single_scan(
      prototype("8y^4+1 square", {"y"}, {"0", "1"}), 0, hi, options.workers,
      [fast_ok](long long y) {
        if (fast_ok) {
          const u128 yy = static_cast<u128>(y) * static_cast<u128>(y);
          const u128 v = 8 * yy * yy + 1;
          return std::pair{fast::is_square(static_cast<i128>(v)), u128_text(v)};
        }
        const Integer v = 8 * Integer(y).pow(4) + 1;
        return std::pair{is_square(v), v.to_string()};
      },
      [](long long y) {
        mpz_class v;
        mpz_pow_ui(v.get_mpz_t(), mpz_of(y).get_mpz_t(), 4);
        v = 8 * v + 1;
        return std::pair{naive::is_square(v), mpz_text(v)};
      }));
  report.claims.push_back(single_scan(
      prototype("2z^2-2 fourth power", {"z"}, {"1", "3"}), 0, hi, options.workers,
      [](long long z) {
        if (z == 0) return std::pair{false, std::string("-2")};
        const u128 v = 2 * static_cast<u128>(z) * static_cast<u128>(z) - 2;
        return std::pair{fast::is_fourth_power(v), u128_text(v)};
      },
      [](long long z) {
        const mpz_class v = 2 * mpz_of(z) * mpz_of(z) - 2;
        return std::pair{naive::is_fourth_power(v), mpz_text(v)};
      }));
  report.config_hash = detail::report_hash("scan-pell", report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

namespace {

ClaimResult integer_cube_claim(std::string name, std::vector<std::string> expected, int sign,
                               long long hi, unsigned workers) {
  return single_scan(
      prototype(std::move(name), {"n"}, std::move(expected)), 0, hi, workers,
      [sign](long long n) {
        const i128 v = static_cast<i128>(n) * n * n + sign;
        return std::pair{v >= 0 && fast::is_square(v), Integer::from_i128(v).to_string()};
      },
      [sign](long long n) {
        const mpz_class v = mpz_of(n) * mpz_of(n) * mpz_of(n) + sign;
        return std::pair{naive::is_square(v), mpz_text(v)};
      });
}

/// (a/b)^3 + sign over reduced a/b >= 0 of height <= h, by exact rationals,
/// cross-checked against a^3*b + sign*b^4 and re-checked with GMP rationals.
ClaimResult rational_cube_claim(std::string name, std::vector<std::string> expected, int sign,
                                long long h, unsigned workers) {
  const bool fast_ok = h < (1LL << 29);
  ClaimResult proto = prototype(std::move(name), {"a", "b"}, std::move(expected));
  return detail::scan_box(
      proto, {Axis{0, h}, Axis{1, h}}, workers,
      [&](std::uint64_t idx, const std::vector<long long>& vals, ClaimResult& part) {
        const long long a = vals[0];
        const long long b = vals[1];
        if (std::gcd(a, b) != 1) return;
        ++part.candidates_tested;
        const Rational x = Rational::normalize(a, b);
        const Rational value = x * x * x + Rational(sign);
        const bool hit = value.is_square();

        bool integer_hit = false;
        if (fast_ok) {
          const i128 bi = b;
          const i128 v = static_cast<i128>(a) * a * a * bi + sign * bi * bi * bi * bi;
          integer_hit = v >= 0 && fast::is_square(v);
        } else {
          const Integer bi(b);
          integer_hit = is_square(Integer(a).pow(3) * bi + sign * bi.pow(4));
        }
        const std::string solution = x.to_string();
        if (integer_hit != hit) {
          ++part.cross_check_mismatches;
          detail::note_mismatch(part, part.name + " routes disagree at " + solution);
        }
        if (hit) {
          part.hits.push_back(Hit{{Integer(a), Integer(b)}, value.to_string(), solution, true,
                                  listed(part.expected, solution)});
        }
        if (!detail::oracle_selected(idx)) return;
        ++part.oracle_samples;
        mpq_class q(mpz_of(a), mpz_of(b));
        q.canonicalize();
        mpq_class v = q * q * q + sign;
        v.canonicalize();
        const bool naive_hit =
            naive::is_square(v.get_num()) && naive::is_square(v.get_den());
        if (naive_hit != hit) {
          ++part.oracle_mismatches;
          detail::note_mismatch(part, part.name + " at " + solution);
        }
      });
}

ClaimResult sextic_claim(std::string name, int sign, long long s, unsigned workers) {
  const bool fast_ok = s < (1LL << 20);
  ClaimResult proto = prototype(std::move(name), {"x", "y"}, {});
  proto.notes.push_back(sign > 0 ? "exception: x*y = 0" : "exception: y = 0 or x = y");
  return detail::scan_box(
      proto, {Axis{0, s}, Axis{0, s}}, workers,
      [&](std::uint64_t idx, const std::vector<long long>& vals, ClaimResult& part) {
        const long long x = vals[0];
        const long long y = vals[1];
        if (std::gcd(x, y) != 1) return;
        ++part.candidates_tested;
        Integer value;
        bool sq = false;
        if (fast_ok) {
          const i128 x3 = static_cast<i128>(x) * x * x;
          const i128 y3 = static_cast<i128>(y) * y * y;
          const i128 v = x3 * x3 + sign * y3 * y3;
          sq = v >= 0 && fast::is_square(v);
          value = Integer::from_i128(v);
        } else {
          value = Integer(x).pow(6) + sign * Integer(y).pow(6);
          sq = is_square(value);
        }
        const bool ex = sign > 0 ? (x == 0 || y == 0) : (y == 0 || x == y);
        if (sq || ex) {
          part.hits.push_back(Hit{{Integer(x), Integer(y)}, value.to_string(),
                                  detail::join_params(vals), sq, ex});
        }
        if (!detail::oracle_selected(idx)) return;
        ++part.oracle_samples;
        mpz_class x6;
        mpz_class y6;
        mpz_pow_ui(x6.get_mpz_t(), mpz_of(x).get_mpz_t(), 6);
        mpz_pow_ui(y6.get_mpz_t(), mpz_of(y).get_mpz_t(), 6);
        const mpz_class v = x6 + sign * y6;
        if (naive::is_square(v) != sq || mpz_text(v) != value.to_string()) {
          ++part.oracle_mismatches;
          detail::note_mismatch(part, part.name + " at " + detail::join_params(vals));
        }
      });
}

}  // namespace

ScanReport scan_cube_plus_one(CubeMode mode, const Natural& bound, const Natural& sextic_bound,
                              const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto hi = static_cast<long long>(detail::to_u64(bound, "bound"));
  const auto s = static_cast<long long>(detail::to_u64(sextic_bound, "sextic bound"));
  if (hi < 2) throw Error(ErrorCode::InvalidArgument, "bound must be at least 2");
  ScanReport report;
  report.target = "cube";
  report.bounds = {{"mode", std::string(to_string(mode))},
                   {"bound", bound.to_string()},
                   {"sextic_bound", sextic_bound.to_string()}};

  const char* zero_note =
      "0 is the cube 0 (0 + 1 = 1); listed as expected but reported so it can be judged separately";
  if (mode == CubeMode::Integer) {
    ClaimResult plus = integer_cube_claim("n^3+1 square", {"0", "2"}, 1, hi, options.workers);
    plus.notes.push_back(zero_note);
    report.claims.push_back(std::move(plus));
    report.claims.push_back(integer_cube_claim("n^3-1 square", {"1"}, -1, hi, options.workers));
  } else {
    ClaimResult plus =
        rational_cube_claim("(a/b)^3+1 rational square", {"0", "2"}, 1, hi, options.workers);
    plus.notes.push_back(zero_note);
    plus.notes.push_back("cross-checked against a^3*b + b^4 over the same (a, b)");
    report.claims.push_back(std::move(plus));
    ClaimResult minus =
        rational_cube_claim("(a/b)^3-1 rational square", {"1"}, -1, hi, options.workers);
    minus.notes.push_back("cross-checked against a^3*b - b^4 over the same (a, b)");
    report.claims.push_back(std::move(minus));
  }
  report.claims.push_back(sextic_claim("x^6+y^6 square", 1, s, options.workers));
  report.claims.push_back(sextic_claim("x^6-y^6 square", -1, s, options.workers));
  report.config_hash = detail::report_hash("scan-cube", report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace quartic::scan
