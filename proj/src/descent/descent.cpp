#include <quartic/descent.hpp>

#include "replay.hpp"

namespace quartic::descent {

using detail::ensure;
using detail::Replay;
using detail::root_of;

DescentOutcome descend_sum_of_fourth_powers(const Natural& a, const Natural& b) {
  Replay r;
  r.step("input", {{"a", a}, {"b", b}});
  if ((a * b).is_zero()) return r.exception("vanishing term");
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, a.to_string() + ", " + b.to_string());

  r.step("value", {{"value", a.pow(4) + b.pow(4)}});
  if (!r.require("sum4.square")) return r.finish();
  if (!r.require("sum4.opposite_parity")) return r.finish();

  const Natural& odd = a.is_odd() ? a : b;
  const Natural& even = a.is_odd() ? b : a;
  r.step("orient odd leg as a", {{"a", odd}, {"b", even}});

  // a^2 = p^2 - q^2, b^2 = 2pq
  const GeneratorPair outer = decompose_sum(odd * odd, even * even);
  r.step("a^2 = p^2 - q^2, b^2 = 2pq", {{"p", outer.p}, {"q", outer.q}});
  if (!r.require("sum4.p_odd")) return r.finish();
  if (!r.require("sum4.p_square")) return r.finish();
  if (!r.require("sum4.two_q_square")) return r.finish();
  const Natural factors[] = {outer.p, Natural(2) * outer.q};
  const auto roots = coprime_power_split(factors, 2);
  r.step("p = s^2, 2q = t^2", {{"s", roots[0]}, {"t", roots[1]}});

  // a^2 + q^2 = p^2 is primitive with a odd: a = m^2 - n^2, q = 2mn, p = m^2 + n^2
  const GeneratorPair inner = decompose_sum(odd, outer.q);
  r.step("a = m^2 - n^2, q = 2mn", {{"m", inner.p}, {"n", inner.q}});
  if (!r.require("sum4.mn_squares")) return r.finish();
  const Natural x = root_of(inner.p);
  const Natural y = root_of(inner.q);
  r.step("m = x^2, n = y^2", {{"x", x}, {"y", y}});
  ensure(x.pow(4) + y.pow(4) == outer.p, "x^4 + y^4 = p");
  return r.reduced(x, y, std::max(a, b));
}

DescentOutcome descend_difference_of_fourth_powers(const Natural& a, const Natural& b) {
  Replay r;
  r.step("input", {{"a", a}, {"b", b}});
  if (b.is_zero()) return r.exception("b = 0");
  if (a == b) return r.exception("a = b");
  if (a < b) throw Error(ErrorCode::OrderViolation, a.to_string() + " < " + b.to_string());
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, a.to_string() + ", " + b.to_string());

  r.step("value", {{"value", a.pow(4) - b.pow(4)}});
  if (!r.require("diff4.square")) return r.finish();

  const DiffDecomposition dd = decompose_diff(a * a, b * b);
  const Natural& p = dd.gen.p;
  const Natural& q = dd.gen.q;
  if (dd.branch == DiffBranch::EvenB) {
    r.step("case b even: a^2 = p^2 + q^2, b^2 = 2pq", {{"p", p}, {"q", q}});
    // (p, q, a) is primitive; the odd leg is m^2 - n^2, the even one 2mn
    const GeneratorPair g = decompose_sum(p, q);
    r.step("{p, q} = {m^2 - n^2, 2mn}", {{"m", g.p}, {"n", g.q}});
    if (!r.require("diff4.mn_squares")) return r.finish();
    const Natural x = root_of(g.p);
    const Natural y = root_of(g.q);
    r.step("m = x^2, n = y^2", {{"x", x}, {"y", y}});
    ensure(is_square(x.pow(4) - y.pow(4)), "x^4 - y^4 square");
    return r.reduced(x, y, a);
  }
  r.step("case b odd: a^2 = p^2 + q^2, b^2 = p^2 - q^2", {{"p", p}, {"q", q}});
  if (!r.require("diff4.product_square")) return r.finish();
  return r.reduced(p, q, a);
}

DescentOutcome descend_fourth_power_plus_double(const Natural& a, const Natural& b) {
  Replay r;
  r.step("input", {{"a", a}, {"b", b}});
  if (b.is_zero()) return r.exception("b = 0");
  if (!coprime(a, b)) throw Error(ErrorCode::NotCoprime, a.to_string() + ", " + b.to_string());

  const Natural value = a.pow(4) + Natural(2) * b.pow(4);
  r.step("value", {{"value", value}});
  if (!r.require("plus2.square")) return r.finish();

  const Natural root = root_of(value);
  const Natural aa = a * a;
  const Natural bb = b * b;
  // root = a^2 + (m/n) b^2, so b^2/a^2 = 2mn/(2n^2 - m^2)
  const Rational mn = Rational::normalize(Integer(root) - aa, bb);
  r.step("root = a^2 + (m/n) b^2", {{"root", root}, {"m", mn.numerator()}, {"n", mn.denominator()}});
  if (!r.require("plus2.m_even")) return r.finish();

  const Integer k = mn.numerator() / 2;
  const Integer& n = mn.denominator();
  r.step("m = 2k", {{"k", k}});
  ensure(Integer(bb) == 2 * k * n && Integer(aa) == n * n - 2 * k * k, "b^2 = 2kn, a^2 = n^2 - 2k^2");
  if (!r.require("plus2.k_even")) return r.finish();
  if (!r.require("plus2.n_2k_squares")) return r.finish();

  const Natural c = root_of(Natural(n));
  const Natural d = root_of(Natural(2 * k)) >> 1;
  r.step("n = c^2, 2k = 4d^2", {{"c", c}, {"d", d}});
  const Natural cc = c * c;
  const Natural dd = d * d;
  ensure(aa == cc * cc - Natural(8) * dd * dd, "a^2 = c^4 - 8d^4");

  // a = c^2 - (2p/q) d^2
  const Rational pq = Rational::normalize(Integer(cc) - a, 2 * Integer(dd));
  const Integer& p = pq.numerator();
  const Integer& q = pq.denominator();
  r.step("a = c^2 - (2p/q) d^2", {{"p", p}, {"q", q}});

  Natural x(0);
  Natural y(0);
  if (p.is_odd()) {
    ensure(Integer(dd) == p * q && Integer(cc) == p * p + 2 * q * q, "d^2 = pq, c^2 = p^2 + 2q^2");
    if (!r.require("plus2.pq_squares")) return r.finish();
    x = root_of(Natural(p));
    y = root_of(Natural(q));
    r.step("p odd: p = x^2, q = y^2", {{"x", x}, {"y", y}});
  } else {
    const Integer rr = p / 2;
    r.step("p = 2r", {{"r", rr}});
    ensure(Integer(dd) == q * rr && Integer(cc) == 2 * rr * rr + q * q, "d^2 = qr, c^2 = 2r^2 + q^2");
    if (!r.require("plus2.qr_squares")) return r.finish();
    x = root_of(Natural(q));
    y = root_of(Natural(rr));
    r.step("p even: q = x^2, r = y^2", {{"x", x}, {"y", y}});
  }
  ensure(x.pow(4) + Natural(2) * y.pow(4) == cc, "x^4 + 2y^4 = c^2");
  return r.reduced(x, y, std::max(a, b));
}

}  // namespace quartic::descent
