#include "vcount/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "vcount/brute_force.hpp"
#include "vcount/congruence.hpp"
#include "vcount/error.hpp"
#include "vcount/input.hpp"
#include "vcount/point_count.hpp"
#include "vcount/report.hpp"
#include "vcount/smith.hpp"

namespace vcount {

namespace {

constexpr std::uint64_t kAutoCheckLimit = 1'000'000;  // free oracle cross-check below this

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_argument, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t oracle_budget() {
  const char* env = std::getenv("VC_BUDGET");
  if (!env || !*env) return OracleConfig{}.max_points;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0)
    fail(Errc::bad_argument, std::string("VC_BUDGET must be a positive integer, got '") + env + "'");
  return v;
}

unsigned default_partitions() {
  unsigned hw = std::thread::hardware_concurrency();
  return std::max(1u, std::min(8u, hw));
}

double elapsed_ms(std::chrono::steady_clock::time_point from) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - from)
      .count();
}

int cmd_count(const std::string& input_path, std::string method, std::string format,
              const std::string& alpha_text, std::ostream& out, std::ostream& err) {
  InputDocument doc = parse_document(read_file(input_path));
  if (doc.equations.size() != 2)
    fail(Errc::bad_argument,
         "count needs exactly two equations, got " + std::to_string(doc.equations.size()));
  FiniteField field = make_document_field(doc.field);

  if (method.empty()) method = doc.options.method.value_or("formula");
  if (format.empty()) format = doc.options.output_format.value_or("text");

  if (!alpha_text.empty()) {
    field = field.with_primitive_element(field.parse_element(alpha_text));
  } else if (doc.options.alpha) {
    field = field.with_primitive_element(element_from_literal(field, *doc.options.alpha));
  }

  CountReport report;
  report.input_echo = render_document(doc);
  report.p = field.p();
  report.degree = field.degree();
  report.q = field.q();
  report.method = method;

  const bool want_formula = method != "bruteforce";
  const bool want_oracle = method != "formula";

  if (want_formula) {
    StaircaseSystem sys = document_staircase(doc, field);
    auto violations = validate(sys);
    if (!violations.empty()) {
      std::string msg = "not a valid staircase system (use --method bruteforce for general systems):";
      for (const auto& v : violations) msg += "\n  - " + v;
      fail(Errc::invalid_system, msg);
    }
    StaircaseShape shape = staircase_shape(sys);
    for (int l = 1; l <= 4; ++l) {
      Int cost = level_enumeration_cost(shape, l, Int(static_cast<unsigned long>(field.q())));
      if (cost > 100'000'000L)
        err << "warning: level " << l << " enumeration needs about " << cost.get_str()
            << " tuples; this will be slow\n";
    }
    auto t0 = std::chrono::steady_clock::now();
    report.formula = count_points(sys);
    report.formula_millis = elapsed_ms(t0);
  }

  OracleConfig cfg;
  cfg.max_points = oracle_budget();
  cfg.partitions = default_partitions();
  PolySystem ps = document_poly_system(doc, field);
  Int points = int_pow(Int(static_cast<unsigned long>(field.q())), ps.nvars);
  const bool auto_check = !want_oracle && points <= Int(static_cast<unsigned long>(
                                                        std::min(kAutoCheckLimit, cfg.max_points)));

  if (want_oracle || auto_check) {
    auto t0 = std::chrono::steady_clock::now();
    OracleRun run;
    run.value = brute_force_count(ps, cfg);
    run.millis = elapsed_ms(t0);
    run.points = points.get_ui();
    report.oracle = run;
  }

  if (report.formula && report.oracle)
    report.agreement = report.formula->total == report.oracle->value;
  report.n_value = report.formula ? report.formula->total : report.oracle->value;

  if (format == "json")
    out << render_json(report).dump(2) << "\n";
  else
    out << render_text(report);
  return report.agreement ? 0 : 2;
}

int cmd_snf(const std::string& input_path, bool verify, const std::string& format,
            std::ostream& out) {
  IntMat e = parse_matrix_text(read_file(input_path));
  SmithDecomposition dec = snf(e);
  bool ok = verify ? verify_decomposition(e, dec) : true;
  if (format == "json") {
    nlohmann::json j;
    j["format"] = 1;
    nlohmann::json facs = nlohmann::json::array();
    for (const Int& d : dec.factors) facs.push_back(d.get_str());
    j["invariant_factors"] = facs;
    j["rank"] = static_cast<std::int64_t>(dec.rank());
    auto mat_json = [](const IntMat& m) {
      nlohmann::json rows = nlohmann::json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j2 = 0; j2 < m.cols(); ++j2) row.push_back(m(i, j2).get_str());
        rows.push_back(row);
      }
      return rows;
    };
    j["D"] = mat_json(dec.form(e.rows(), e.cols()));
    j["U"] = mat_json(dec.u);
    j["V"] = mat_json(dec.v);
    if (verify) j["verified"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "invariant factors:";
    for (const Int& d : dec.factors) out << " " << d.get_str();
    out << "\nrank: " << dec.rank() << "\n";
    out << "D:\n" << render_matrix_text(dec.form(e.rows(), e.cols()));
    out << "U:\n" << render_matrix_text(dec.u);
    out << "V:\n" << render_matrix_text(dec.v);
    if (verify) out << "verified: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_congruence(const std::string& input_path, const std::string& format, std::ostream& out) {
  CongruenceFile file = parse_congruence_text(read_file(input_path));
  CongruenceSystem sys{file.h, file.b, file.modulus};
  SmithDecomposition dec = snf(sys.h);
  bool solvable = is_solvable(sys, dec);
  Int count = solution_count(sys, dec);
  if (format == "json") {
    nlohmann::json j;
    j["format"] = 1;
    j["solvable"] = solvable;
    j["count"] = count.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << "solvable: " << (solvable ? "yes" : "no") << "\n";
    out << "count: " << count.get_str() << "\n";
  }
  return 0;
}

// The worked F_7 example, with every published intermediate pinned.
constexpr const char* kSelftestDocument = R"(format = 1
field { p = 7, n = 1 }
eq: x1*x2^4 + x1*x2^5 + x1^2*x2^3*x3*x4^4 = 2
eq: x1*x2^5*x3^3 + x1*x2^3*x3^2 + x1^2*x2^4*x3^3*x4^5*x5*x6 = 4
)";

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  InputDocument doc = parse_document(kSelftestDocument);
  FiniteField field = make_document_field(doc.field);
  StaircaseSystem sys = document_staircase(doc, field);
  CountBreakdown bd = count_points(sys);

  check("case label n1<n3<n2<n4", bd.case_label == CaseLabel::n1_n3_n2_n4);
  auto level_factors = [&](int l) {
    const auto& ls = bd.levels[static_cast<std::size_t>(l - 1)];
    return ls ? ls->invariant_factors : std::vector<Int>{};
  };
  check("invariant factors of E^(3) = (1,1,1)", level_factors(3) == std::vector<Int>{1, 1, 1});
  check("invariant factors of E^(2) = (1,1,1,4)", level_factors(2) == std::vector<Int>{1, 1, 1, 4});
  check("invariant factors of E^(4) = (1,1,1,1,4)",
        level_factors(4) == std::vector<Int>{1, 1, 1, 1, 4});
  auto level_h = [&](int l) {
    const auto& ls = bd.levels[static_cast<std::size_t>(l - 1)];
    return ls ? ls->h : Int(-1);
  };
  check("H2 = 9", level_h(2) == 9);
  check("H3 = 4", level_h(3) == 4);
  check("H4 = 84", level_h(4) == 84);
  check("N2 = 196", bd.terms[2].applicable && bd.terms[2].value == 196);
  check("N3 = 234", bd.terms[3].applicable && bd.terms[3].value == 234);
  check("N4 = 1008", bd.terms[4].applicable && bd.terms[4].value == 1008);
  check("N = 1438 (formula)", bd.total == 1438);

  OracleConfig cfg;
  cfg.partitions = default_partitions();
  Int oracle = brute_force_count(document_poly_system(doc, field), cfg);
  check("N = 1438 (brute force over 117649 points)", oracle == 1438);
  check("formula agrees with brute force", oracle == bd.total);

  out << (failures == 0 ? "selftest passed\n" : "selftest FAILED\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact rational-point counting for staircase varieties over F_q"};
  app.require_subcommand(1);

  std::string input, method, format, alpha;

  CLI::App* count = app.add_subcommand("count", "count points of a two-equation system");
  count->add_option("--input", input, ".vc input document")->required();
  count->add_option("--method", method, "formula | bruteforce | both")
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}));
  count->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  count->add_option("--alpha", alpha, "primitive element override");

  bool verify = false;
  CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf_cmd->add_option("--input", input, "matrix file")->required();
  snf_cmd->add_flag("--verify", verify, "check the decomposition invariants");
  snf_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* cong = app.add_subcommand("congruence", "solve counts for H*Y = B (mod m)");
  cong->add_option("--input", input, "congruence file")->required();
  cong->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* self = app.add_subcommand("selftest", "run the built-in golden example");

  std::vector<const char*> argv;
  argv.push_back("vcount");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (count->parsed()) return cmd_count(input, method, format, alpha, out, err);
    if (snf_cmd->parsed()) return cmd_snf(input, verify, format.empty() ? "text" : format, out);
    if (cong->parsed()) return cmd_congruence(input, format.empty() ? "text" : format, out);
    if (self->parsed()) return cmd_selftest(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded ? 3 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace vcount
