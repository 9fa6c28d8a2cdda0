// tnn-cells: command-line front end for the library.
//
// Exit codes: 0 success, 1 assertion or verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tnn_cells/cells.hpp"
#include "tnn_cells/errors.hpp"
#include "tnn_cells/families.hpp"
#include "tnn_cells/parallel.hpp"
#include "tnn_cells/poisson.hpp"
#include "tnn_cells/restoration.hpp"
#include "tnn_cells/serialize.hpp"
#include "tnn_cells/verify.hpp"

using namespace tnn;

namespace {

constexpr int kSymbolicCap = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Assertion failure with a machine-readable counterexample for stdout.
struct Failure : std::runtime_error {
  Failure(const std::string& what, json detail) : std::runtime_error(what), detail(std::move(detail)) {}
  json detail;
};

struct Globals {
  std::string format = "json";
  unsigned threads = 0;
  bool force = false;
};

bool table(const Globals& g) { return g.format == "table"; }

void check_size(int m, int p) {
  if (m < 1 || p < 1) throw UsageError("m and p must be positive");
  if (m * p > 64) throw UsageError("grid " + std::to_string(m) + "x" + std::to_string(p) + " exceeds 64 cells");
  try {
    check_grid_size(m, p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_symbolic(int m, int p, const Globals& g) {
  check_size(m, p);
  if (m * p > kSymbolicCap && !g.force) {
    throw UsageError("symbolic enumeration with m*p = " + std::to_string(m * p) + " > " +
                     std::to_string(kSymbolicCap) + " needs --force");
  }
}

std::string read_source(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read " + arg);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

RationalMatrix read_matrix(const std::string& arg) {
  try {
    return parse_matrix_csv(read_source(arg));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("bad matrix input: " + std::string(e.what()));
  }
}

CauchonDiagram read_diagram(const std::string& arg) {
  const std::string text = !arg.empty() && arg.front() == '{' ? arg : read_source(arg);
  try {
    return diagram_from_json(json::parse(text));
  } catch (const std::exception& e) {
    throw UsageError("bad diagram input: " + std::string(e.what()));
  }
}

json matrix_json(const RationalMatrix& x) {
  json rows = json::array();
  for (int i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (int a = 0; a < x.cols(); ++a) row.push_back(x(i, a).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string grid(const CauchonDiagram& c) {
  std::string out;
  for (int i = 1; i <= c.m(); ++i) {
    for (int a = 1; a <= c.p(); ++a) out += c.is_black(i, a) ? '#' : '.';
    out += '\n';
  }
  return out;
}

void print_family(const MinorFamily& f, const Globals& g) {
  if (table(g)) {
    for (const MinorId& id : f) std::cout << id.str() << "\n";
  } else {
    std::cout << to_json(f).dump() << "\n";
  }
}

// `result` is the algorithm's output: the last matrix for restoration, the
// first for deletion.
void print_trace(const MatrixTrace<Rational>& tr, const RationalMatrix& result, bool full, const Globals& g) {
  if (table(g)) {
    std::cout << (full ? trace_to_string(tr) : matrix_to_csv(result));
    return;
  }
  if (!full) {
    std::cout << json{{"matrix", matrix_json(result)}}.dump() << "\n";
    return;
  }
  json steps = json::array();
  for (std::size_t k = 0; k < tr.size(); ++k)
    steps.push_back({{"step", tr.steps()[k].str()}, {"matrix", matrix_json(tr.by_position(k))}});
  std::cout << json{{"steps", std::move(steps)}}.dump() << "\n";
}

int run_verify(const std::string& suite, int m, int p, std::size_t n, std::uint64_t seed, const Globals& g) {
  SuiteResult r;
  if (suite == "counts") {
    check_size(m, p);
    r = verify_counts(m, p);
  } else if (suite == "match") {
    check_symbolic(m, p, g);
    r = verify_match(m, p, g.threads);
  } else if (suite == "monotonicity") {
    check_size(m, p);
    r = n > 0 ? verify_monotonicity(m, p, n, seed) : verify_monotonicity(m, p);
  } else if (suite == "tnn-roundtrip") {
    check_size(m, p);
    r = verify_tnn_generation(tnn_corpus(m, p, n > 0 ? n : 100, seed), g.threads);
  } else if (suite == "deletion") {
    check_size(m, p);
    r = verify_deletion(tnn_corpus(m, p, n > 0 ? n : 100, seed), g.threads);
  } else if (suite == "poisson") {
    check_symbolic(m, p, g);
    r = verify_poisson_steps(m, p, g.threads);
  } else if (suite == "brackets") {
    check_size(m, p);
    r = verify_bracket_properties(m, p, n > 0 ? n : 1000, seed);
  } else if (suite == "bruhat") {
    check_size(m, p);
    r = verify_bruhat_lemmas(m, p, n > 0 ? static_cast<int>(n) : 20, seed);
  } else {
    throw UsageError("unknown suite " + suite);
  }
  if (table(g)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  } else {
    std::cout << json{{"suite", suite}, {"m", m}, {"p", p}, {"passed", r.passed}, {"checked", r.checked},
                      {"detail", r.detail}}
                     .dump()
              << "\n";
  }
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cells of totally nonnegative matrices: diagrams, minor families, restoration."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", g.threads, "Worker threads (default: TNN_CELLS_THREADS or hardware)");
  app.add_flag("--force", g.force, "Allow symbolic enumeration beyond 12 cells");

  int m = 0, p = 0;
  bool count_only = false;
  std::string w_text, input, suite;
  bool full_trace = false, with_perm = false;
  std::size_t n = 0;
  std::uint64_t seed = 1;

  auto add_size = [&](CLI::App* sub) {
    sub->add_option("m", m, "Rows")->required();
    sub->add_option("p", p, "Columns")->required();
  };

  CLI::App* diagrams = app.add_subcommand("diagrams", "List or count m x p Cauchon diagrams");
  add_size(diagrams);
  diagrams->add_flag("--count", count_only, "Print only the count");

  CLI::App* perms = app.add_subcommand("perms", "List or count the restricted permutations S");
  add_size(perms);
  perms->add_flag("--count", count_only, "Print only the count");

  CLI::App* mw = app.add_subcommand("mw", "Minor family M(w) of a restricted permutation");
  add_size(mw);
  mw->add_option("--w", w_text, "One-line notation, e.g. 3,1,4,2,7,6,5")->required();

  CLI::App* mc = app.add_subcommand("mc", "Minor family M(C) of a Cauchon diagram");
  mc->add_option("diagram", input, "Diagram JSON, a file holding it, or - for stdin")->required();

  CLI::App* match = app.add_subcommand("match", "Match the families M(w) and M(C)");
  add_size(match);

  CLI::App* classify_cmd = app.add_subcommand("classify", "Cell of a tnn matrix");
  classify_cmd->add_option("matrix", input, "CSV file or - for stdin")->required();
  classify_cmd->add_flag("--perm", with_perm, "Also find w with M(w) = M(C)");

  CLI::App* restore_cmd = app.add_subcommand("restore", "Run the restoration algorithm");
  restore_cmd->add_option("matrix", input, "CSV file or - for stdin")->required();
  restore_cmd->add_flag("--trace", full_trace, "Print every intermediate matrix");

  CLI::App* delete_cmd = app.add_subcommand("delete", "Run the deleting-derivations algorithm");
  delete_cmd->add_option("matrix", input, "CSV file or - for stdin")->required();
  delete_cmd->add_flag("--trace", full_trace, "Print every intermediate matrix");

  CLI::App* tnn_check = app.add_subcommand("tnn-check", "Test total nonnegativity; exit 1 with a witness if it fails");
  tnn_check->add_option("matrix", input, "CSV file or - for stdin")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "counts|match|monotonicity|tnn-roundtrip|deletion|poisson|brackets|bruhat")
      ->required();
  add_size(verify);
  verify->add_option("--n", n, "Sample count (suite default when 0)");
  verify->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (g.threads == 0) g.threads = default_thread_count();

  try {
    if (app.got_subcommand(diagrams)) {
      check_size(m, p);
      if (count_only) {
        std::cout << count_diagrams(m, p) << "\n";
      } else if (table(g)) {
        bool first = true;
        for_each_diagram(m, p, [&](const CauchonDiagram& c) {
          std::cout << (first ? "" : "\n") << grid(c);
          first = false;
        });
      } else {
        json out = json::array();
        for_each_diagram(m, p, [&](const CauchonDiagram& c) { out.push_back(to_json(c)); });
        std::cout << out.dump() << "\n";
      }
    } else if (app.got_subcommand(perms)) {
      check_size(m, p);
      if (count_only) {
        std::uint64_t k = 0;
        for_each_restricted_perm(m, p, [&](const RestrictedPermutation&) { ++k; });
        std::cout << k << "\n";
      } else if (table(g)) {
        for_each_restricted_perm(m, p, [&](const RestrictedPermutation& w) { std::cout << w.str() << "\n"; });
      } else {
        json out = json::array();
        for_each_restricted_perm(m, p, [&](const RestrictedPermutation& w) { out.push_back(w.one_line()); });
        std::cout << out.dump() << "\n";
      }
    } else if (app.got_subcommand(mw)) {
      check_size(m, p);
      std::optional<RestrictedPermutation> w;
      try {
        w.emplace(m, p, parse_one_line(w_text));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      print_family(compute_Mw(*w), g);
    } else if (app.got_subcommand(mc)) {
      const CauchonDiagram c = read_diagram(input);
      print_family(compute_MC(c), g);
    } else if (app.got_subcommand(match)) {
      check_symbolic(m, p, g);
      const auto pairs = match_families(m, p, g.threads);
      if (table(g)) {
        for (const MatchedPair& pr : pairs) {
          std::cout << pr.perm.str() << "  mask " << pr.diagram.mask() << "  |M| = " << pr.family.size() << "\n";
        }
      } else {
        json out = json::array();
        for (const MatchedPair& pr : pairs) out.push_back(to_json(pr));
        std::cout << out.dump() << "\n";
      }
    } else if (app.got_subcommand(classify_cmd)) {
      const RationalMatrix x = read_matrix(input);
      check_size(x.rows(), x.cols());
      try {
        const CellDescriptor d = classify(x, with_perm);
        if (table(g)) {
          std::cout << grid(d.diagram);
          for (const MinorId& id : d.family) std::cout << id.str() << "\n";
          if (d.matched_perm) std::cout << "w = " << d.matched_perm->str() << "\n";
        } else {
          std::cout << to_json(d).dump() << "\n";
        }
      } catch (const NotTotallyNonnegative& e) {
        throw Failure(e.what(), {{"is_tnn", false}, {"witness", e.witness().str()}, {"witness_value", e.value().str()}});
      }
    } else if (app.got_subcommand(restore_cmd)) {
      const MatrixTrace<Rational> tr = restore(read_matrix(input));
      print_trace(tr, tr.final(), full_trace, g);
    } else if (app.got_subcommand(delete_cmd)) {
      const MatrixTrace<Rational> tr = delete_derivations(read_matrix(input));
      print_trace(tr, tr.initial(), full_trace, g);
    } else if (app.got_subcommand(tnn_check)) {
      const TnnVerdict v = is_tnn(read_matrix(input));
      if (table(g)) {
        std::cout << (v.is_tnn ? "tnn" : "not tnn: " + v.witness->str() + " = " + v.witness_value->str()) << "\n";
      } else {
        std::cout << to_json(v).dump() << "\n";
      }
      return v.is_tnn ? 0 : 1;
    } else if (app.got_subcommand(verify)) {
      return run_verify(suite, m, p, n, seed, g);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Failure& e) {
    std::cout << e.detail.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailure& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
