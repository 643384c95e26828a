// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include <quartic/cli.hpp>
#include <quartic/descent.hpp>
#include <quartic/error.hpp>
#include <quartic/pythagoras.hpp>
#include <quartic/scan.hpp>

using namespace quartic;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

/// Oracle totals collected from the scans of criteria 3 to 5.
struct OracleTally {
  std::uint64_t samples = 0;
  std::uint64_t mismatches = 0;
  std::size_t scans = 0;
  std::size_t scans_without_samples = 0;

  void add(const scan::ScanReport& r) {
    for (const auto& c : r.claims) {
      ++scans;
      samples += c.oracle_samples;
      mismatches += c.oracle_mismatches + c.cross_check_mismatches;
      if (c.oracle_samples == 0) ++scans_without_samples;
    }
  }
};

OracleTally oracle;
int failures = 0;

void report(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream why;
    why << "took " << secs << " s, limit " << limit_s << " s";
    o.fail(why.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

template <typename F>
void each_generator(unsigned long max_p, F f) {
  for (unsigned long p = 2; p <= max_p; ++p) {
    for (unsigned long q = 1; q < p; ++q) {
      const GeneratorPair g{Natural(p), Natural(q)};
      if (g.valid()) f(g);
    }
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return "{" + s + "}";
}

void expect_solutions(Outcome& o, const scan::ClaimResult& c, const std::vector<std::string>& want) {
  if (c.square_values() != want) {
    o.fail(c.name + " solutions " + join(c.square_values()) + ", want " + join(want));
  }
  if (!c.violations().empty()) o.fail(c.name + " has violations");
}

Outcome roundtrip() {
  Outcome o;
  std::size_t pairs = 0;
  each_generator(200, [&](const GeneratorPair& g) {
    ++pairs;
    const PrimitiveTriple t = compose_triple(g);
    if (!(decompose_sum(t.a, t.b) == g)) o.fail("roundtrip broke at p=" + g.p.to_string());
  });
  o.detail = o.ok ? std::to_string(pairs) + " pairs" : o.detail;
  return o;
}

Outcome divisibility() {
  Outcome o;
  std::size_t triples = 0;
  each_generator(200, [&](const GeneratorPair& g) {
    ++triples;
    const PrimitiveTriple t = compose_triple(g);
    const DivisibilityReport d = divisibility_report(t);
    const auto member = [&](Member m) -> const Natural& {
      return m == Member::A ? t.a : m == Member::B ? t.b : t.c;
    };
    const auto divides = [](unsigned long k, const Natural& n) {
      return (n.as_integer() % Integer(k)).is_zero();
    };
    if (!divides(3, member(d.div3)) || d.div4 != Member::B || !divides(4, t.b) ||
        !divides(5, member(d.div5))) {
      o.fail("triple from p=" + g.p.to_string() + " q=" + g.q.to_string());
    }
  });
  o.detail = o.ok ? std::to_string(triples) + " triples" : o.detail;
  return o;
}

Outcome catalog_scans() {
  Outcome o;
  std::size_t scans = 0;
  std::uint64_t tested = 0;
  for (const forms::FormDef& f : forms::Catalog::instance().forms()) {
    const bool family = f.arity() > 2;
    for (bool coprime : {false, true}) {
      const scan::ScanReport r =
          scan::verify_form(f.id, Natural(family ? 100 : 300), coprime, Natural(12));
      oracle.add(r);
      ++scans;
      tested += r.candidates_tested();
      if (r.violation_count() != 0) {
        o.fail(f.id + (coprime ? " coprime" : "") + ": " + std::to_string(r.violation_count()) +
               " violations");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(scans) + " scans, " + std::to_string(tested) + " tuples";
  return o;
}

Outcome triangular_and_pell() {
  Outcome o;
  const scan::ScanReport t = scan::scan_triangular(Natural(1000000));
  const scan::ScanReport p = scan::scan_pell_corollaries(Natural(1000000));
  oracle.add(t);
  oracle.add(p);
  expect_solutions(o, t.claims.at(0), {"0", "1"});
  expect_solutions(o, p.claims.at(0), {"0", "1"});
  expect_solutions(o, p.claims.at(1), {"1", "3"});
  return o;
}

Outcome cube_plus_one() {
  Outcome o;
  const scan::ScanReport i = scan::scan_cube_plus_one(scan::CubeMode::Integer, Natural(100000),
                                                      Natural(100));
  const scan::ScanReport r = scan::scan_cube_plus_one(scan::CubeMode::Rational, Natural(50),
                                                      Natural(100));
  oracle.add(i);
  oracle.add(r);
  expect_solutions(o, i.claims.at(0), {"0", "2"});
  expect_solutions(o, r.claims.at(0), {"0", "2"});
  for (const scan::ScanReport* rep : {&i, &r}) {
    for (std::size_t k = 2; k < 4; ++k) {
      if (!rep->claims.at(k).violations().empty()) o.fail(rep->claims[k].name + " has violations");
    }
  }
  if (r.claims.at(0).cross_check_mismatches != 0) o.fail("rational and a^3*b + b^4 routes disagree");

  // The same (a, b) set flagged by the integer form directly.
  std::vector<std::string> integer_route;
  for (long a = 0; a <= 50; ++a) {
    for (long b = 1; b <= 50; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Integer v = Integer(a).pow(3) * Integer(b) + Integer(b).pow(4);
      if (is_square(v)) integer_route.push_back(Rational::normalize(a, b).to_string());
    }
  }
  if (integer_route != r.claims[0].square_values()) {
    o.fail("flag sets differ: integer " + join(integer_route) + " rational " +
           join(r.claims[0].square_values()));
  }
  return o;
}

Outcome descent_replay() {
  Outcome o;
  std::size_t contradictions = 0, exceptions = 0;
  const auto check = [&](const descent::DescentOutcome& d, const std::string& where,
                         bool exception_expected, const std::string& exception_name) {
    switch (d.tag) {
      case descent::Tag::Reduced:
        o.fail(where + " reduced");
        break;
      case descent::Tag::Exception:
        ++exceptions;
        if (!exception_expected || d.exception_name != exception_name) {
          o.fail(where + " unexpected exception " + d.exception_name.value_or("?"));
        }
        break;
      case descent::Tag::Contradiction:
        ++contradictions;
        if (exception_expected) o.fail(where + " missed exception " + exception_name);
        if (!d.violated || descent::condition_holds(*d.violated, d.merged_bindings())) {
          o.fail(where + " violated condition holds on its trace");
        }
        break;
    }
  };
  for (unsigned long a = 0; a <= 300; ++a) {
    for (unsigned long b = 0; b <= 300; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const std::string at = "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
      check(descent::descend_sum_of_fourth_powers(Natural(a), Natural(b)), "sum " + at,
            a * b == 0, "vanishing term");
      check(descent::descend_fourth_power_plus_double(Natural(a), Natural(b)), "plus2 " + at,
            b == 0, "b = 0");
      if (a >= b) {
        check(descent::descend_difference_of_fourth_powers(Natural(a), Natural(b)), "diff " + at,
              b == 0 || a == b, b == 0 ? "b = 0" : "a = b");
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(contradictions) + " contradictions, " + std::to_string(exceptions) +
               " exceptions";
  }
  return o;
}

Outcome identities() {
  Outcome o;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long long> dist(-1000000, 1000000);
  const auto r = [&] { return Integer(dist(rng)); };
  std::size_t checks = 0;
  for (int i = 0; i < 10000; ++i) {
    for (const descent::IdentityCheck& c :
         {descent::pythagorean_parametrization(r(), r()), descent::doubled_sum_decomposition(r(), r()),
          descent::minus_six_decomposition(r(), r()), descent::plus_six_decomposition(r(), r()),
          descent::cube_tu_substitution(r(), r()), descent::mixed_square_sum(r(), r(), r()),
          descent::cube_root_parametrization(r(), r())}) {
      ++checks;
      if (!c.holds()) o.fail(c.name + ": " + c.lhs.to_string() + " != " + c.rhs.to_string());
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " evaluations";
  return o;
}

Outcome determinism() {
  Outcome o;
  std::string reference;
  for (const char* workers : {"1", "4", "8"}) {
    std::ostringstream out, err;
    const int code = cli::run({"verify", "--form", "F1", "--bound", "200", "--workers", workers},
                              out, err);
    if (code != 0) o.fail(std::string("exit ") + std::to_string(code) + " with " + workers + " workers");
    if (reference.empty()) {
      reference = out.str();
    } else if (out.str() != reference) {
      o.fail(std::string("output differs with ") + workers + " workers");
    }
  }
  if (reference.empty()) o.fail("no output");
  return o;
}

Outcome oracle_cross_check() {
  Outcome o;
  if (oracle.scans == 0) o.fail("no scans recorded");
  if (oracle.mismatches != 0) o.fail(std::to_string(oracle.mismatches) + " disagreements");
  if (oracle.samples == 0) o.fail("no oracle samples");
  if (o.ok) {
    o.detail = std::to_string(oracle.samples) + " samples over " + std::to_string(oracle.scans) +
               " claims";
    if (oracle.scans_without_samples) {
      o.detail += ", " + std::to_string(oracle.scans_without_samples) + " too small to sample";
    }
  }
  return o;
}

}  // namespace

int main() {
  report(1, "generator roundtrip, p <= 200", 5, roundtrip);
  report(2, "divisibility by 3, 4 and 5, p <= 200", 0, divisibility);
  report(3, "catalog scans, bound 300 (families 100, parameters 12)", 120, catalog_scans);
  report(4, "triangular fourth powers, 8y^4+1 and 2z^2-2 to 10^6", 30, triangular_and_pell);
  report(5, "cube plus one: integer 10^5, rational height 50, sextics 100", 0, cube_plus_one);
  report(6, "descent replays over coprime pairs <= 300", 0, descent_replay);
  report(7, "algebraic identities at 10^4 random points", 0, identities);
  report(8, "byte-identical JSONL with 1, 4 and 8 workers", 0, determinism);
  report(9, "naive oracle agrees on every sampled tuple of 3 to 5", 0, oracle_cross_check);
  return failures == 0 ? 0 : 1;
}
