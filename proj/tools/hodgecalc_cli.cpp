// Command-line front end: evaluates construction-language expressions,
// runs the checkers and the toric verification sweep, and converts between
// the JSON wire formats.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 hypothesis or
// inconsistency failure, 3 internal failure. Every failure prints exactly
// one machine-readable JSON line on stderr and nothing on stdout.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hodgecalc/bott.hpp"
#include "hodgecalc/constructors.hpp"
#include "hodgecalc/dsl.hpp"
#include "hodgecalc/json_io.hpp"
#include "hodgecalc/spectral.hpp"
#include "hodgecalc/toric.hpp"

namespace {

using namespace hodgecalc;

struct CliFailure {
  int exit_code;
  nlohmann::ordered_json diagnostic;
};

[[noreturn]] void fail(int exit_code, nlohmann::ordered_json diagnostic) {
  throw CliFailure{exit_code, std::move(diagnostic)};
}

[[noreturn]] void fail_simple(int exit_code, const std::string& kind,
                              const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  fail(exit_code, std::move(j));
}

DiamondFormat parse_format(const std::string& name) {
  if (name == "text") return DiamondFormat::Text;
  if (name == "json") return DiamondFormat::Json;
  if (name == "csv") return DiamondFormat::Csv;
  fail_simple(1, "usage", "unknown format \"" + name + "\"");
}

void check_characteristic(long long characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    fail_simple(1, "argument",
                "characteristic must be 0 or a prime, got " + std::to_string(characteristic));
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) fail_simple(1, "io", "cannot open \"" + path + "\"");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail_simple(1, "io", "cannot parse \"" + path + "\": " + e.what());
  }
}

VarietyExpr parse_or_fail(const std::string& text) {
  try {
    return parse(text);
  } catch (const LexicalError& e) {
    nlohmann::ordered_json j;
    j["error"] = "lexical";
    j["position"] = e.position;
    j["message"] = e.what();
    fail(1, std::move(j));
  } catch (const SyntaxError& e) {
    nlohmann::ordered_json j;
    j["error"] = "syntax";
    j["position"] = e.position;
    j["expected"] = e.expected;
    j["message"] = e.what();
    fail(1, std::move(j));
  } catch (const SemanticError& e) {
    nlohmann::ordered_json j;
    j["error"] = "semantic";
    j["position"] = e.position;
    j["message"] = e.what();
    fail(1, std::move(j));
  }
}

// library exceptions not already turned into diagnostics
[[noreturn]] void rethrow_as_diagnostic(const std::exception_ptr& excptr) {
  try {
    std::rethrow_exception(excptr);
  } catch (const CliFailure&) {
    throw;
  } catch (const EvalError& e) {
    nlohmann::ordered_json j;
    j["error"] = "evaluation";
    j["subexpression"] = e.subexpression;
    j["message"] = e.what();
    fail(1, std::move(j));
  } catch (const HypothesisError& e) {
    fail_simple(2, "hypothesis", e.what());
  } catch (const InconsistencyError& e) {
    fail_simple(2, "inconsistency", e.what());
  } catch (const CodimensionError& e) {
    fail_simple(1, "codimension", e.what());
  } catch (const RangeError& e) {
    fail_simple(1, "range", e.what());
  } catch (const UnsupportedError& e) {
    fail_simple(1, "unsupported", e.what());
  } catch (const InvalidFanError& e) {
    fail_simple(1, "invalid-fan", e.what());
  } catch (const ArgumentError& e) {
    fail_simple(1, "argument", e.what());
  } catch (const std::exception& e) {
    fail_simple(3, "internal", e.what());
  }
}

nlohmann::ordered_json violation_report(const ValidationReport& report) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) {
    nlohmann::ordered_json entry;
    entry["kind"] = v.kind;
    entry["p"] = v.p;
    entry["q"] = v.q;
    entry["message"] = v.message;
    violations.push_back(std::move(entry));
  }
  return violations;
}

int run_eval(const std::string& expr, const std::string& format, long long characteristic) {
  check_characteristic(characteristic);
  const HodgeGrid g = eval(parse_or_fail(expr), characteristic);
  std::cout << print_diamond(g, parse_format(format));
  return 0;
}

int run_check(const std::string& expr) {
  const HodgeGrid g = eval(parse_or_fail(expr));
  ValidationReport report = validate(g);

  // invariant suite on top of the type invariants
  Int by_total = 0, by_anti = 0;
  for (int l = 0; l <= 2 * g.dim; ++l) by_total += total_hodge(g, l);
  for (int l = -g.dim; l <= g.dim; ++l) by_anti += anti_diagonal(g, l);
  if (by_total != grid_sum(g) || by_anti != grid_sum(g))
    report.violations.push_back({"aggregation", -1, -1, "degree sums disagree with the table"});
  for (int l = 0; l <= 2 * g.dim; ++l)
    if (total_hodge(g, l) != total_hodge(g, 2 * g.dim - l)) {
      report.violations.push_back({"duality", -1, -1,
                                   "total dimensions are not symmetric about the middle degree"});
      break;
    }

  nlohmann::ordered_json out;
  out["ok"] = report.ok();
  out["violations"] = violation_report(report);
  std::cout << out.dump() << "\n";
  return report.ok() ? 0 : 2;
}

int run_hh(const std::string& expr, long long characteristic) {
  check_characteristic(characteristic);
  const HodgeGrid g = eval(parse_or_fail(expr), characteristic);
  std::cout << hochschild_to_json(hh_from_grid(g)).dump() << "\n";
  return 0;
}

int run_defect(const std::string& page, const std::string& grid_path,
               const std::string& data_path) {
  const HodgeGrid g = grid_from_json(load_json_file(grid_path));
  DefectVector defect;
  if (page == "e1")
    defect = e1_defect(g, de_rham_from_json(load_json_file(data_path)));
  else if (page == "e2")
    defect = e2_defect(g, hochschild_from_json(load_json_file(data_path)));
  else
    fail_simple(1, "usage", "defect page must be e1 or e2, got \"" + page + "\"");
  std::cout << defect_to_json(defect).dump() << "\n";
  return 0;
}

int run_bott(const std::vector<long long>& values, bool table) {
  if (table) {
    if (values.size() != 2)
      fail_simple(1, "usage", "bott --table expects <n> <m>");
    const int n = static_cast<int>(values[0]), m = static_cast<int>(values[1]);
    if (n < 1) fail_simple(1, "argument", "ambient dimension must be >= 1");
    std::ostringstream out;
    out << "p\\q";
    for (int q = 0; q <= n; ++q) out << "," << q;
    out << "\n";
    for (int p = 0; p <= n; ++p) {
      out << p;
      for (int q = 0; q <= n; ++q) out << "," << bott_h({n, p, m, q}).str();
      out << "\n";
    }
    std::cout << out.str();
    return 0;
  }
  if (values.size() != 4)
    fail_simple(1, "usage", "bott expects <n> <p> <m> <q>");
  const BottQuery query{static_cast<int>(values[0]), static_cast<int>(values[1]),
                        static_cast<int>(values[2]), static_cast<int>(values[3])};
  std::cout << bott_h(query).str() << "\n";
  return 0;
}

int run_oracle_verify(const std::string& seed_name, int depth) {
  Fan seed;
  if (seed_name == "P2")
    seed = p2_fan();
  else if (seed_name == "P3")
    seed = p3_fan();
  else if (seed_name == "P1xP1")
    seed = p1xp1_fan();
  else
    fail_simple(1, "usage", "seed must be one of P2, P3, P1xP1");

  const SweepResult result = oracle_equivalence_sweep(seed, depth);
  if (!result.ok) fail_simple(3, "internal", result.first_failure);
  nlohmann::ordered_json out;
  out["seed"] = seed_name;
  out["depth"] = depth;
  out["fans"] = result.fans_visited;
  out["checks"] = result.checks;
  out["ok"] = true;
  std::cout << out.dump() << "\n";
  return 0;
}

int run_batch(const std::string& path, const std::string& format, long long characteristic) {
  check_characteristic(characteristic);
  const DiamondFormat diamond_format = parse_format(format);
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) fail_simple(1, "io", "cannot open \"" + path + "\"");

  int worst = 0;
  std::string line;
  long long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      try {
        const HodgeGrid g = eval(parse_or_fail(line), characteristic);
        std::cout << print_diamond(g, diamond_format);
      } catch (...) {
        rethrow_as_diagnostic(std::current_exception());
      }
    } catch (CliFailure& failure) {
      failure.diagnostic["line"] = line_number;
      std::cerr << failure.diagnostic.dump() << "\n";
      worst = std::max(worst, failure.exit_code);
    }
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hodge-grid calculator: blow-up, bundle and product formulas with "
               "spectral-sequence defect bookkeeping and a toric oracle"};
  app.require_subcommand(1);

  std::string expr, format = "text", batch_file;
  long long characteristic = 0;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression and print the table");
  eval_cmd->add_option("expr", expr, "construction-language expression")->required();
  eval_cmd->add_option("--format", format, "text | json | csv");
  eval_cmd->add_option("--char", characteristic, "characteristic tag (0 or a prime)");

  auto* check_cmd = app.add_subcommand("check", "validate the grid an expression denotes");
  check_cmd->add_option("expr", expr, "construction-language expression")->required();

  auto* hh_cmd = app.add_subcommand("hh", "Hochschild dimensions under the strong-HKR gate");
  hh_cmd->add_option("expr", expr, "construction-language expression")->required();
  hh_cmd->add_option("--char", characteristic, "characteristic tag (0 or a prime)");

  std::string defect_page, grid_path, data_path;
  auto* defect_cmd = app.add_subcommand("defect", "degeneracy defect from grid + data files");
  defect_cmd->add_option("page", defect_page, "e1 | e2")->required();
  defect_cmd->add_option("--grid", grid_path, "grid JSON file")->required();
  defect_cmd->add_option("--data", data_path, "de Rham (e1) or Hochschild (e2) JSON file")
      ->required();

  std::vector<long long> bott_values;
  bool bott_table = false;
  auto* bott_cmd = app.add_subcommand("bott", "twisted-forms dimensions on projective space");
  bott_cmd->add_option("values", bott_values, "n p m q, or n m with --table")->expected(-1);
  bott_cmd->add_flag("--table", bott_table, "print the full (p,q) table for n, m");

  std::string seed_name = "P2";
  int depth = 3;
  auto* oracle_cmd = app.add_subcommand("oracle", "toric combinatorial oracle");
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "run the blow-up equivalence sweep");
  verify_cmd->add_option("--seed", seed_name, "P2 | P3 | P1xP1");
  verify_cmd->add_option("--depth", depth, "number of subdivision rounds");

  auto* batch_cmd = app.add_subcommand("batch", "evaluate one expression per line");
  batch_cmd->add_option("file", batch_file, "input file")->required();
  batch_cmd->add_option("--format", format, "text | json | csv");
  batch_cmd->add_option("--char", characteristic, "characteristic tag (0 or a prime)");

  try {
    try {
      app.parse(argc, argv);
      if (eval_cmd->parsed()) return run_eval(expr, format, characteristic);
      if (check_cmd->parsed()) return run_check(expr);
      if (hh_cmd->parsed()) return run_hh(expr, characteristic);
      if (defect_cmd->parsed()) return run_defect(defect_page, grid_path, data_path);
      if (bott_cmd->parsed()) return run_bott(bott_values, bott_table);
      if (oracle_cmd->parsed()) {
        if (!verify_cmd->parsed()) fail_simple(1, "usage", "expected: oracle verify");
        return run_oracle_verify(seed_name, depth);
      }
      if (batch_cmd->parsed()) return run_batch(batch_file, format, characteristic);
      fail_simple(1, "usage", "no subcommand given");
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);  // help text on stdout is not an error path
    } catch (const CLI::ParseError& e) {
      fail_simple(1, "usage", e.what());
    } catch (const CliFailure&) {
      throw;
    } catch (...) {
      rethrow_as_diagnostic(std::current_exception());
    }
  } catch (const CliFailure& failure) {
    std::cerr << failure.diagnostic.dump() << "\n";
    return failure.exit_code;
  }
}
