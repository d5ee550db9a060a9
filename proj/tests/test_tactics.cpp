#include <fstream>
#include <sstream>

#include "doctest.h"
#include "etf/model/arith.hpp"
#include "etf/model/combinators.hpp"
#include "etf/proof_builder.hpp"
#include "etf/tactics.hpp"

using namespace etf;
using syntax::Formula;
using syntax::Sort;
using syntax::Term;

namespace {

kernel::ProofScript corpus(const std::string& stem) {
  std::ifstream in(std::string(ETF_SOURCE_DIR) + "/corpus/" + stem + ".json");
  std::ostringstream ss;
  ss << in.rdbuf();
  return kernel::parse_script(ss.str());
}

syntax::Context ictx() {
  return {{"m", Sort::N}, {"n", Sort::N}, {"r", Sort::N}, {"k", Sort::N}, {"g", Sort::F3}, {"u", Sort::F1}};
}

}  // namespace

TEST_CASE("internalization of a term") {
  const syntax::Context c = ictx();
  const Term t = syntax::parse_term("g(u(n),S(m),k)", c);
  const auto d = tactics::internalize_proof(t, {"m", "n", "r"}, c);
  const auto r = d.check();
  CHECK_MESSAGE(r.ok, r.message);
  CHECK(d.goal.kind() == Formula::Kind::Exists);
  CHECK(d.goal.sort() == Sort::F3);

  model::Env env;
  env.set("k", Nat(4));
  env.set("u", model::native(1, "u", [](const Nat* a) { return a[0] * Nat(3); }));
  env.set("g", model::native(3, "g", [](const Nat* a) { return a[0] + a[1] * Nat(10) + a[2] * Nat(100); }));
  const auto w = tactics::internalize(t, {"m", "n", "r"}, c, env).witness;
  CHECK(w(Nat(2), Nat(5), Nat(0)) == Nat(15 + 30 + 400));
}

TEST_CASE("internalization at lower arity") {
  const syntax::Context c = ictx();
  const auto d = tactics::internalize_proof(syntax::parse_term("u(S(n))", c), {"n", "m", "r"}, c, 1);
  CHECK(d.check().ok);
  CHECK(d.goal.sort() == Sort::F1);
  CHECK_THROWS(tactics::internalize_proof(syntax::parse_term("u(m)", c), {"n", "m", "r"}, c, 1));
  CHECK_THROWS_AS(tactics::internalize_proof(syntax::parse_term("n", c), {"n", "n", "r"}, c), tactics::VarClash);
}

TEST_CASE("equational induction from corpus proofs") {
  const auto base = corpus("succ_plus_base"), step = corpus("succ_plus_step");
  CHECK(kernel::check_script(base).ok);
  CHECK(kernel::check_script(step).ok);
  const auto d = tactics::equational_induction(syntax::parse_term("plus(n,S(0))", step.context),
                                               syntax::parse_term("S(n)", step.context), "n", base.steps,
                                               step.steps, step.premises);
  const auto r = d.check();
  CHECK_MESSAGE(r.ok, r.message);
  CHECK(syntax::print(d.goal) == "all n:N. plus(n,S(0))=S(n)");
  // base and step swapped
  CHECK_THROWS_AS(tactics::equational_induction(syntax::parse_term("plus(n,S(0))", step.context),
                                                syntax::parse_term("S(n)", step.context), "n", step.steps,
                                                base.steps, step.premises),
                  tactics::PremiseMismatch);
}

TEST_CASE("open induction from corpus proofs") {
  const auto base = corpus("pred_zero_base"), step = corpus("pred_zero_step");
  const Formula phi = step.goal.body().left();
  const auto d = tactics::open_induction(phi, "n", base.steps, step.steps, step.premises);
  const auto r = d.check();
  CHECK_MESSAGE(r.ok, r.message);
  CHECK(syntax::alpha_equal(d.goal, Formula::forall("n", Sort::N, phi)));
}

TEST_CASE("definition by cases") {
  syntax::Context c = theories::defined_context();
  for (const char* v : {"n", "m", "r"})
    if (!c.contains(v)) c.declare(v, Sort::N);
  const auto def = tactics::conditional_def(syntax::parse_formula("n=m", c), syntax::parse_term("r", c),
                                            syntax::parse_term("S(r)", c));
  CHECK(def.witness(Nat(3), Nat(3), Nat(7)) == Nat(7));
  CHECK(def.witness(Nat(3), Nat(4), Nat(7)) == Nat(8));
  CHECK(syntax::print(def.defining_term).rfind("f2(", 0) == 0);
}

TEST_CASE("proof builder steps are checked") {
  const auto th = theories::axioms_of(theories::TheoryId::COM_fcn);
  tactics::ProofBuilder b(th, {});
  const int ax = b.axiom("succ-i");
  const int i = b.inst(ax, syntax::numeral(2));
  CHECK(syntax::print(b.formula(i)) == "~(S(S(S(0)))=0)");
  const auto steps = b.take();
  CHECK(kernel::check_proof(th, {}, steps, steps.back().formula).ok);
}
