#include <quartic/descent.hpp>

#include <tuple>

#include "replay.hpp"

namespace quartic::descent {

using detail::ensure;
using detail::Replay;
using detail::root_of;

namespace {

/// Root m - (p/q) n of m^2 - 3n^2 = w^2; the positive choice of p/q.
Rational tangent_ratio(const Integer& m, const Integer& n, const Integer& w) {
  Rational r = Rational::normalize(m - w, n);
  if (r.sign() <= 0) r = Rational::normalize(m + w, n);
  return r;
}

std::pair<Integer, Integer> primitive_pair(Integer t, Integer u) {
  if (t.sign() < 0 && u.sign() <= 0) {
    t = -t;
    u = -u;
  }
  const Natural g = gcd(Natural(t.abs()), Natural(u.abs()));
  if (!g.is_zero() && g != Natural(1)) {
    t = t / g;
    u = u / g;
  }
  return {t, u};
}

}  // namespace

DescentOutcome reduce_cube_form(const Natural& b, const Natural& c) {
  if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "c must be positive");
  Replay r;
  r.step("input", {{"b", b}, {"c", c}, {"a", Integer(c) - b}});
  if (b.is_zero()) return r.exception("b = 0 degenerate");
  if (c == b) return r.exception("a = 0 degenerate");
  if (c == Natural(3) * b) return r.exception("cube 8 case");
  if (!coprime(b, c)) throw Error(ErrorCode::NotCoprime, b.to_string() + ", " + c.to_string());

  r.step("value", {{"value", cube_form_value(b, c)}});
  if (!r.require("cube.square")) return r.finish();

  Integer b_next;
  Integer c_next;
  if (!(c % Natural(3)).is_zero()) {
    // b, c and c^2 - 3bc + 3b^2 are pairwise coprime
    if (!r.require("cube.factor_squares")) return r.finish();
    const Integer bi = b;
    const Integer ci = c;
    const Natural s = root_of(Natural(ci * ci - 3 * bi * ci + 3 * bi * bi));
    // c^2 - 3bc + 3b^2 = ((m/n) b - c)^2
    const Rational mn = Rational::normalize(ci + s, bi);
    const Integer& m = mn.numerator();
    const Integer& n = mn.denominator();
    r.step("c^2 - 3bc + 3b^2 = ((m/n) b - c)^2", {{"s", s}, {"m", m}, {"n", n}});
    const Integer w = root_of(c);
    if (!(m % 3).is_zero()) {
      if (!r.require("cube.mn_lowest_terms")) return r.finish();
      // c = m^2 - 3n^2 = (m - (p/q) n)^2 gives b/n^2 = (p^2 - 3pq + 3q^2)/(pq)
      const Rational pq = tangent_ratio(m, n, w);
      r.step("c = (m - (p/q) n)^2", {{"w", w}, {"p", pq.numerator()}, {"q", pq.denominator()}});
      b_next = pq.denominator();
      c_next = pq.numerator();
    } else {
      const Integer k = m / 3;
      r.step("m = 3k", {{"k", k}});
      if (!r.require("cube.nk_lowest_terms")) return r.finish();
      // c = n^2 - 3k^2 = (n - (p/q) k)^2 leaves (p^2 + 3q^2)(p - q)(p - 3q)
      const Rational pq = tangent_ratio(n, k, w);
      const Integer& p = pq.numerator();
      const Integer& q = pq.denominator();
      r.step("c = (n - (p/q) k)^2", {{"w", w}, {"p", p}, {"q", q}});
      std::tie(b_next, c_next) = primitive_pair(p - q, p - 3 * q);
      r.step("t = p - q, u = p - 3q", {{"t", p - q}, {"u", p - 3 * q}});
    }
  } else {
    const Natural d = c / Natural(3);
    r.step("c = 3d", {{"d", d}});
    b_next = d;
    c_next = b;
  }
  r.step("reduced pair", {{"b_next", b_next}, {"c_next", c_next}});
  if (!r.require("cube.reduced_square")) return r.finish();
  ensure(b_next.sign() >= 0 && c_next.sign() > 0, "reduced pair is positive");
  const Natural nb(b_next);
  const Natural nc(c_next);
  ensure(nb + nc < b + c, "reduced pair is not smaller");
  return r.reduced_unchecked(nb, nc);
}

}  // namespace quartic::descent
