// etf: parse, check, evaluate, compile, internalize and run the property suites.
// Exit codes: 0 ok, 1 check or claim failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "etf/compile.hpp"
#include "etf/harness.hpp"
#include "etf/model/builtins.hpp"
#include "etf/proof_script.hpp"
#include "etf/tactics.hpp"
#include "etf/theories.hpp"

namespace {

using namespace etf;

// Input that could not be read or parsed; exits with 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// The defined function names and the number variables n, m, r, k, unless a
// context file ("decl x : N" lines) is given.
syntax::Context load_context(const std::string& path) {
  if (!path.empty()) {
    try {
      return syntax::Context::parse_file_text(read_file(path));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  syntax::Context ctx = theories::defined_context();
  for (const char* v : {"n", "m", "r", "k"})
    if (!ctx.contains(v)) ctx.declare(v, syntax::Sort::N);
  return ctx;
}

template <class F>
auto parsed(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::array<std::string, 3> split_vars(const std::string& text) {
  std::array<std::string, 3> out{"m", "n", "r"};
  std::stringstream ss(text);
  std::string v;
  for (std::size_t i = 0; std::getline(ss, v, ','); ++i) {
    if (i >= 3) throw UsageError("at most three variables");
    out[i] = v;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary theory of functions: syntax, proof kernel, model and property suites"};
  app.require_subcommand(1);

  std::string term, formula, ctx_file, env_file, script_file, route = "product", vars_text = "m,n,r";
  int arity = 3;

  auto* parse = app.add_subcommand("parse", "Parse and print a term or formula");
  auto* parse_kind = parse->add_option_group("kind");
  parse_kind->add_option("--term", term, "Term text");
  parse_kind->add_option("--formula", formula, "Formula text");
  parse_kind->require_option(1);
  parse->add_option("--ctx", ctx_file, "Context file");

  auto* check = app.add_subcommand("check", "Check a proof script");
  check->add_option("script", script_file, "Proof script JSON")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a term in the standard model");
  eval->add_option("--term", term, "Term text")->required();
  eval->add_option("--env", env_file, "Environment file")->required();

  auto* compile = app.add_subcommand("compile", "Compile an open formula to a term t with phi <-> t=0");
  compile->add_option("--formula", formula, "Formula text")->required();
  compile->add_option("--ctx", ctx_file, "Context file");
  compile->add_option("--route", route, "product, demorgan or singular")
      ->check(CLI::IsMember({"product", "demorgan", "singular"}));

  auto* internalize = app.add_subcommand("internalize", "Emit a proof of ex f. all v. f(v)=t");
  internalize->add_option("--term", term, "Term text")->required();
  internalize->add_option("--ctx", ctx_file, "Context file");
  internalize->add_option("--vars", vars_text, "Bound variables, comma separated");
  internalize->add_option("--arity", arity, "Arity of f")->check(CLI::Range(1, 3));

  harness::Options opt;
  std::vector<std::string> suites, faults;
  std::string json_out;
  std::uint64_t bound = 0;
  bool no_timing = false;
  auto* test = app.add_subcommand("test", "Run property suites");
  test->add_option("--suite", suites, "Suite id (repeatable; default all)");
  test->add_option("--bound", bound, "Override the main box of each suite");
  test->add_option("--fuel", opt.fuel, "Search fuel");
  test->add_option("--seed", opt.seed, "Seed for randomized families");
  test->add_option("--json", json_out, "Write the reports as JSON");
  test->add_option("--inject", faults, "Plant a fault: [LABEL:]name=builtin");
  test->add_option("--only", opt.only, "Run only this label or group, e.g. L8.x or L8");
  test->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");

  auto* theories_cmd = app.add_subcommand("theories", "Axiom systems");
  theories_cmd->require_subcommand(1);
  std::string theory_id;
  auto* exp = theories_cmd->add_subcommand("export", "Print the axioms as 'name : formula'");
  exp->add_option("id", theory_id, "COM_fcn, COMI_fcn, PRA_fcn or ETF")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) {
      const auto ctx = load_context(ctx_file);
      std::cout << (term.empty() ? syntax::print(parsed([&] { return syntax::parse_formula(formula, ctx); }))
                                 : syntax::print(parsed([&] { return syntax::parse_term(term, ctx); })))
                << '\n';
      return 0;
    }
    if (*check) {
      const std::string text = read_file(script_file);
      const auto script = parsed([&] { return kernel::parse_script(text); });
      const auto r = kernel::check_script(script);
      if (r.ok) {
        std::cout << "ok: " << syntax::print(script.goal) << '\n';
        return 0;
      }
      std::cout << "rejected";
      if (r.failing_step) std::cout << " at step " << *r.failing_step;
      std::cout << ": " << r.message << '\n';
      return 1;
    }
    if (*eval) {
      const std::string text = read_file(env_file);
      const auto env = parsed([&] { return model::parse_env(text); });
      const auto t = parsed([&] { return syntax::parse_term(term, model::env_context(env)); });
      std::cout << model::eval_term(t, env).str() << '\n';
      return 0;
    }
    if (*compile) {
      const auto ctx = load_context(ctx_file);
      const auto phi = parsed([&] { return syntax::parse_formula(formula, ctx); });
      // a quantified or non-singular formula is bad input, not a failed check
      const syntax::Term t = parsed([&] {
        return route == "demorgan"   ? tactics::compile_term_demorgan(phi)
               : route == "singular" ? tactics::compile_term_singular(phi)
                                     : tactics::compile_term(phi);
      });
      std::cout << syntax::print(t) << '\n';
      return 0;
    }
    if (*internalize) {
      const auto ctx = load_context(ctx_file);
      const auto t = parsed([&] { return syntax::parse_term(term, ctx); });
      const auto d = tactics::internalize_proof(t, split_vars(vars_text), ctx, arity);
      std::cout << kernel::to_json(d.script()) << '\n';
      return 0;
    }
    if (*test) {
      if (bound) opt.bound = bound;
      opt.timing = !no_timing;
      for (const auto& f : faults) opt.faults.push_back(parsed([&] { return harness::parse_fault(f); }));
      std::vector<harness::SuiteId> ids;
      for (const auto& s : suites) ids.push_back(parsed([&] { return harness::parse_suite(s); }));
      if (ids.empty()) ids = harness::all_suites();
      std::vector<harness::Report> reports;
      for (const auto id : ids) {
        reports.push_back(harness::run_suite(id, opt));
        std::cout << harness::summary(reports.back()) << std::flush;
      }
      if (!json_out.empty()) {
        std::ofstream out(json_out, std::ios::binary);
        if (!out) throw UsageError("cannot write " + json_out);
        out << harness::to_json(reports, 2) << '\n';
      }
      return harness::exit_code(reports);
    }
    if (*exp) {
      const auto id = parsed([&] { return theories::parse_theory_id(theory_id); });
      std::cout << theories::export_theory(id);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "etf: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "etf: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
