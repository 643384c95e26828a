#include "naive_oracle.hpp"

namespace quartic::scan::naive {

mpz_class evaluate_terms(const forms::FormDef& form, std::span<const long long> params) {
  mpz_class total = 0;
  for (const forms::Monomial& t : form.terms) {
    mpz_class product = t.coefficient.mpz();
    for (std::size_t i = 0; i < params.size(); ++i) {
      mpz_class base = static_cast<long>(params[i]);
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), t.exponents[i]);
      product *= power;
    }
    total += product;
  }
  return total;
}

bool is_square(const mpz_class& n) {
  if (sgn(n) < 0) return false;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r * r == n;
}

bool is_fourth_power(const mpz_class& n) {
  if (sgn(n) < 0) return false;
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4);
  return r * r * r * r == n;
}

}  // namespace quartic::scan::naive
