#include <quartic/cli.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

namespace quartic::cli {

namespace {

struct Result {
  std::vector<CertificateRecord> records;
  std::string summary;
  int code = 0;
};

struct Globals {
  std::string out_path;
  unsigned workers = 0;
  std::string format = "jsonl";
  bool timing = false;
  std::size_t max_listed = 1000;
};

std::string yes_no(bool v) { return v ? "yes" : "no"; }

Result triple_result(std::string_view operation, const PrimitiveTriple& t) {
  const DivisibilityReport d = divisibility_report(t);
  std::ostringstream s;
  s << "(p, q) = (" << t.gen.p << ", " << t.gen.q << ")  (a, b, c) = (" << t.a << ", " << t.b
    << ", " << t.c << ")  3 | " << to_string(d.div3) << ", 4 | " << to_string(d.div4) << ", 5 | "
    << to_string(d.div5) << "\n";
  return {{triple_record(operation, t)}, s.str(), 0};
}

Result scan_result(const scan::ScanReport& r, const Globals& g) {
  std::ostringstream s;
  s << "target " << r.target;
  for (const auto& [k, v] : r.bounds) s << "  " << k << "=" << v;
  s << "\n";
  std::size_t width = 5;
  for (const auto& c : r.claims) width = std::max(width, c.name.size());
  s << std::left << std::setw(static_cast<int>(width) + 2) << "claim" << std::right
    << std::setw(12) << "tested" << std::setw(10) << "squares" << std::setw(12) << "exceptions"
    << std::setw(12) << "violations" << std::setw(9) << "oracle" << std::setw(12) << "mismatches"
    << "\n";
  for (const auto& c : r.claims) {
    std::size_t exceptions = 0;
    for (const auto& h : c.hits) exceptions += h.is_exception ? 1 : 0;
    s << std::left << std::setw(static_cast<int>(width) + 2) << c.name << std::right
      << std::setw(12) << c.candidates_tested << std::setw(10) << c.squares().size()
      << std::setw(12) << exceptions << std::setw(12) << c.violations().size() << std::setw(9)
      << c.oracle_samples << std::setw(12) << c.oracle_mismatches + c.cross_check_mismatches
      << "\n";
    if (!c.expected.empty()) {
      const auto found = c.square_values();
      s << "  solutions:";
      for (std::size_t i = 0; i < found.size() && i < g.max_listed; ++i) s << " " << found[i];
      s << "  (expected";
      for (const auto& e : c.expected) s << " " << e;
      s << ")\n";
    }
    for (const auto& v : c.violations()) s << "  VIOLATION " << v.solution << " = " << v.value << "\n";
    for (const auto& m : c.mismatch_examples) s << "  MISMATCH " << m << "\n";
  }
  s << std::fixed << std::setprecision(3) << "elapsed "
    << std::chrono::duration<double>(r.elapsed).count() << " s\n";
  return {{scan_record(r, {g.timing, g.max_listed})}, s.str(), exit_code_for(r)};
}

Result descent_result(const std::string& theorem, const Natural& x, const Natural& y) {
  descent::DescentOutcome o;
  if (theorem == "1") {
    o = descent::descend_sum_of_fourth_powers(x, y);
  } else if (theorem == "2") {
    o = descent::descend_difference_of_fourth_powers(x, y);
  } else if (theorem == "8") {
    o = descent::descend_fourth_power_plus_double(x, y);
  } else {
    o = descent::reduce_cube_form(x, y);
  }
  std::ostringstream s;
  s << to_string(o.tag);
  if (o.exception_name) s << ": " << *o.exception_name;
  if (o.violated) s << ": " << descent::condition(*o.violated).failure << " [" << *o.violated << "]";
  if (o.reduced) s << ": (" << o.reduced->first << ", " << o.reduced->second << ")";
  s << "\n";
  for (const auto& step : o.trace) {
    s << "  " << step.label;
    for (const auto& [name, value] : step.bindings) s << "  " << name << "=" << value;
    s << "\n";
  }
  const int code = o.tag == descent::Tag::Reduced ? 2 : 0;
  return {{descent_record(theorem, x, y, o)}, s.str(), code};
}

Result catalog_result() {
  Result r;
  std::ostringstream s;
  for (const auto& entry : forms::Catalog::instance().manifest()) {
    r.records.push_back(catalog_record(entry));
    s << std::left << std::setw(6) << entry.at("id").get<std::string>() << "  "
      << std::setw(42) << entry.at("polynomial").get<std::string>() << "  "
      << entry.at("exception").get<std::string>() << "\n";
  }
  r.summary = s.str();
  return r;
}

Result eval_result(const std::string& form_id, const std::vector<std::string>& assignments) {
  forms::ParamMap params;
  for (const auto& a : assignments) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::InvalidArgument, "expected name=value, got " + a);
    }
    const std::string name = a.substr(0, eq);
    if (params.count(name)) throw Error(ErrorCode::ArityMismatch, "duplicate parameter " + name);
    params.emplace(name, Integer::parse(a.substr(eq + 1)));
  }
  const forms::FormInstance inst = forms::evaluate(form_id, params);
  std::ostringstream s;
  s << inst.form << "(";
  for (std::size_t i = 0; i < inst.params.size(); ++i) {
    s << (i ? ", " : "") << inst.params[i].first << "=" << inst.params[i].second;
  }
  s << ") = " << inst.value << "  square: " << yes_no(inst.is_square)
    << "  exception: " << yes_no(inst.is_exception) << "\n";
  const int code = inst.is_square != inst.is_exception ? 2 : 0;
  return {{form_eval_record(inst)}, s.str(), code};
}

}  // namespace

int exit_code_for(const scan::ScanReport& report) {
  if (report.violation_count() > 0) return 2;
  if (report.oracle_mismatches() > 0) return 3;
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quartic non-square claims", "quartic"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out_path, "Write JSONL records to this file");
  app.add_option("--workers", g.workers, "Scan worker threads (default: QUARTIC_WORKERS or cores)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--format", g.format, "jsonl or summary")
      ->check(CLI::IsMember({"jsonl", "summary"}));
  app.add_flag("--timing", g.timing, "Include elapsed time in scan records");
  app.add_option("--max-listed", g.max_listed, "Hits listed per claim (counts are always complete)");

  auto* triple = app.add_subcommand("triple", "Primitive Pythagorean triples");
  triple->require_subcommand(1, 1);
  std::string tp, tq;
  auto* compose = triple->add_subcommand("compose", "Triple from generator pair P Q");
  compose->add_option("P", tp)->required();
  compose->add_option("Q", tq)->required();
  std::string ta, tb;
  auto* decompose = triple->add_subcommand("decompose", "Generator pair from legs A B");
  decompose->add_option("A", ta)->required();
  decompose->add_option("B", tb)->required();

  auto* verify = app.add_subcommand("verify", "Scan a catalog form");
  std::string form_id, bound, family_bound = "12";
  bool coprime_only = false;
  verify->add_option("--form", form_id)->required();
  verify->add_option("--bound", bound)->required();
  verify->add_option("--family-bound", family_bound);
  verify->add_flag("--coprime-only", coprime_only);

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive claim scans");
  scan_cmd->require_subcommand(1, 1);
  std::string max_x, pell_max, cube_mode, cube_bound, sextic_bound = "100";
  auto* triangular = scan_cmd->add_subcommand("triangular", "x(x+1)/2 fourth powers");
  triangular->add_option("--max-x", max_x)->required();
  auto* pell = scan_cmd->add_subcommand("pell", "8y^4+1 squares and 2z^2-2 fourth powers");
  pell->add_option("--max", pell_max)->required();
  auto* cube = scan_cmd->add_subcommand("cube", "Cubes plus or minus one that are squares");
  cube->add_option("--mode", cube_mode)->required()->check(CLI::IsMember({"integer", "rational"}));
  cube->add_option("--bound", cube_bound)->required();
  cube->add_option("--sextic-bound", sextic_bound);

  auto* descend = app.add_subcommand("descend", "Replay one descent step");
  std::string theorem, da, db;
  descend->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"1", "2", "8", "10"}));
  descend->add_option("A", da)->required();
  descend->add_option("B", db)->required();

  auto* catalog = app.add_subcommand("catalog", "Form catalog");
  catalog->require_subcommand(1, 1);
  auto* list = catalog->add_subcommand("list", "List every form");

  auto* eval = app.add_subcommand("eval", "Evaluate one form instance");
  std::string eval_form;
  std::vector<std::string> assignments;
  eval->add_option("--form", eval_form)->required();
  eval->add_option("params", assignments, "name=value ...");

  for (auto* sub : {triple, compose, decompose, verify, scan_cmd, triangular, pell, cube, descend,
                    catalog, list, eval}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  Result result;
  try {
    const scan::ScanOptions options{g.workers};
    if (*compose) {
      result = triple_result("compose",
                             compose_triple(GeneratorPair{Natural::parse(tp), Natural::parse(tq)}));
    } else if (*decompose) {
      const GeneratorPair gen = decompose_sum(Natural::parse(ta), Natural::parse(tb));
      result = triple_result("decompose", compose_triple(gen));
    } else if (*verify) {
      result = scan_result(scan::verify_form(form_id, Natural::parse(bound), coprime_only,
                                             Natural::parse(family_bound), options),
                           g);
    } else if (*triangular) {
      result = scan_result(scan::scan_triangular(Natural::parse(max_x), options), g);
    } else if (*pell) {
      result = scan_result(scan::scan_pell_corollaries(Natural::parse(pell_max), options), g);
    } else if (*cube) {
      const auto mode = cube_mode == "integer" ? scan::CubeMode::Integer : scan::CubeMode::Rational;
      result = scan_result(scan::scan_cube_plus_one(mode, Natural::parse(cube_bound),
                                                    Natural::parse(sextic_bound), options),
                           g);
    } else if (*descend) {
      result = descent_result(theorem, Natural::parse(da), Natural::parse(db));
    } else if (*list) {
      result = catalog_result();
    } else if (*eval) {
      result = eval_result(eval_form, assignments);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::string jsonl;
  for (const auto& r : result.records) jsonl += r.serialize() + "\n";
  if (!g.out_path.empty()) {
    std::ofstream file(g.out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << g.out_path << "\n";
      return 1;
    }
    file << jsonl;
  }
  if (g.format == "summary") {
    out << result.summary;
  } else if (g.out_path.empty()) {
    out << jsonl;
  }
  return result.code;
}

}  // namespace quartic::cli
