// flca: command-line front end for the finite-rank LCA group engine.
//
//   flca eval "<expr>" [--json]
//   flca table --op {rhom|hom|tensor|dtensor|k0mul} --primes 2,3 --exps 1,2 [--tsv|--json] [--with-afin]
//   flca selftest [--suite <name>]
//
// Exit codes: 0 success, 1 parse / type / usage error, 2 internal invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flca/frontend/evaluate.hpp"
#include "flca/frontend/selftest.hpp"
#include "flca/frontend/table.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kInvariantError = 2;

int run_eval(const std::string& input, bool json) {
  const auto value = flca::frontend::evaluate(input);
  if (json)
    std::cout << flca::frontend::to_json(value).dump() << "\n";
  else
    std::cout << flca::frontend::render_text(value) << "\n";
  return kOk;
}

int run_table(const std::string& op_name, const std::vector<std::uint64_t>& primes,
              const std::vector<std::uint32_t>& exps, bool json, bool with_afin) {
  const auto op = flca::frontend::parse_table_op(op_name);
  if (!op) {
    std::cerr << "error: unknown table op '" << op_name << "'\n";
    return kUserError;
  }
  for (auto p : primes)
    if (!flca::is_prime(p)) {
      std::cerr << "error: " << p << " is not prime\n";
      return kUserError;
    }
  for (auto n : exps)
    if (n == 0) {
      std::cerr << "error: exponents must be >= 1\n";
      return kUserError;
    }
  const auto table = flca::frontend::make_table(*op, flca::frontend::table_atoms(primes, exps, with_afin));
  if (json)
    std::cout << flca::frontend::to_json(table).dump(2) << "\n";
  else
    std::cout << flca::frontend::to_tsv(table);
  return kOk;
}

int run_selftest(const std::string& only) {
  namespace st = flca::frontend::selftest;
  bool matched = false;
  bool all_passed = true;
  std::size_t ran = 0, passed = 0;
  for (const auto& suite : st::suites()) {
    if (!only.empty() && suite.name != only) continue;
    matched = true;
    const auto r = suite.run();
    ++ran;
    if (r.passed) ++passed;
    all_passed &= r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)";
    if (!r.note.empty()) std::cout << " " << r.note;
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  failed: " << f << "\n";
  }
  if (!matched) {
    std::cerr << "error: unknown suite '" << only << "'\n";
    return kUserError;
  }
  std::cout << passed << "/" << ran << " suites passed\n";
  return all_passed ? kOk : kInvariantError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic calculator for finite-rank locally compact abelian groups"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  std::string expr;
  bool eval_json = false;
  eval->add_option("expr", expr, "Expression, e.g. \"rhom(Q, Z)\"")->required();
  eval->add_flag("--json", eval_json, "Print {\"kind\", \"value\"} JSON");

  auto* table = app.add_subcommand("table", "Tabulate an operation over all atom pairs");
  std::string op = "rhom";
  std::vector<std::uint64_t> primes{2};
  std::vector<std::uint32_t> exps{1};
  bool table_json = false, table_tsv = false, with_afin = false;
  table->add_option("--op", op, "rhom, hom, tensor, dtensor or k0mul")->required();
  table->add_option("--primes", primes, "Comma-separated primes")->delimiter(',');
  table->add_option("--exps", exps, "Comma-separated exponents for Z/p^n")->delimiter(',');
  auto* tsv_flag = table->add_flag("--tsv", table_tsv, "TSV output (default)");
  table->add_flag("--json", table_json, "JSON output")->excludes(tsv_flag);
  table->add_flag("--with-afin", with_afin, "Include the finite adeles as a row and column");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");
  std::string suite;
  selftest->add_option("--suite", suite, "Run only the named suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUserError;
  }

  try {
    if (*eval) return run_eval(expr, eval_json);
    if (*table) return run_table(op, primes, exps, table_json, with_afin);
    if (*selftest) return run_selftest(suite);
  } catch (const flca::ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUserError;
  } catch (const flca::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return kUserError;
  } catch (const flca::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInvariantError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  }
  return kOk;
}
