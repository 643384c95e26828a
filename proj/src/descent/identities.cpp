#include <quartic/descent.hpp>

namespace quartic::descent {

namespace {

Integer sq(const Integer& x) { return x * x; }

}  // namespace

HalvesReport check_halves_identities(const Natural& a, const Natural& b) {
  if (a.is_even() || b.is_even()) {
    throw Error(ErrorCode::ParityViolation, a.to_string() + ", " + b.to_string());
  }
  if (a <= b) throw Error(ErrorCode::OrderViolation, a.to_string() + ", " + b.to_string());
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, a.to_string() + ", " + b.to_string());

  HalvesReport out;
  out.a = a;
  out.b = b;
  out.doubled_sum_identity = doubled_sum_decomposition(a, b).holds();
  const Natural aa = a * a;
  const Natural bb = b * b;
  out.half_sum = (aa + bb) >> 1;
  out.half_diff = (aa - bb) >> 1;
  out.halves_coprime = coprime(out.half_sum, out.half_diff);
  out.lower_half = (a - b) >> 1;
  out.upper_half = (a + b) >> 1;
  out.p = exact_root(out.lower_half, 2);
  out.q = exact_root(out.upper_half, 2);
  if (out.p && out.q) out.fourth_power_identity = out.half_sum == out.p->pow(4) + out.q->pow(4);
  return out;
}

IdentityCheck pythagorean_parametrization(const Integer& p, const Integer& q) {
  return {"pythagorean parametrization", sq(sq(p) - sq(q)) + sq(2 * p * q), sq(sq(p) + sq(q))};
}

IdentityCheck doubled_sum_decomposition(const Integer& a, const Integer& b) {
  return {"doubled sum of fourth powers", 2 * a.pow(4) + 2 * b.pow(4),
          sq(sq(a) + sq(b)) + sq(sq(a) - sq(b))};
}

IdentityCheck minus_six_decomposition(const Integer& a, const Integer& b) {
  return {"a^4 - 6a^2b^2 + b^4", a.pow(4) - 6 * sq(a * b) + b.pow(4),
          sq(sq(a) - sq(b)) - 4 * sq(a * b)};
}

IdentityCheck plus_six_decomposition(const Integer& a, const Integer& b) {
  return {"a^4 + 6a^2b^2 + b^4", a.pow(4) + 6 * sq(a * b) + b.pow(4),
          sq(sq(a) + sq(b)) + 4 * sq(a * b)};
}

IdentityCheck cube_tu_substitution(const Integer& p, const Integer& q) {
  const Integer t = p - q;
  const Integer u = p - 3 * q;
  return {"t-u substitution", (sq(p) + 3 * sq(q)) * (p - q) * (p - 3 * q),
          t * u * (3 * sq(t) - 3 * t * u + sq(u))};
}

IdentityCheck mixed_square_sum(const Integer& a, const Integer& b, const Integer& m) {
  const Integer p = sq(a) + m * sq(b);
  const Integer q = sq(a) - m * sq(b);
  return {"(a^2 + mb^2)^2 + (a^2 - mb^2)^2", sq(p) + sq(q), 2 * a.pow(4) + 2 * sq(m) * b.pow(4)};
}

IdentityCheck cube_root_parametrization(const Integer& m, const Integer& n) {
  const Integer b = 3 * sq(n) - 2 * m * n;
  const Integer c = 3 * sq(n) - sq(m);
  return {"cube root parametrization", sq(n) * (sq(c) - 3 * b * c + 3 * sq(b)), sq(m * b - n * c)};
}

}  // namespace quartic::descent
