#include "doctest.h"
#include "etf/proof_script.hpp"

using namespace etf;
using namespace etf::kernel;
using syntax::Formula;
using syntax::Term;

namespace {

syntax::Context ctx() { return syntax::Context{{"f", syntax::Sort::F1}, {"m", syntax::Sort::N}, {"n", syntax::Sort::N}}; }

Formula F(const std::string& s) { return syntax::parse_formula(s, ctx()); }
Term T(const std::string& s) { return syntax::parse_term(s, ctx()); }

ProofStep step(int id, const std::string& f, Rule r, RuleArgs a = {}) {
  ProofStep st;
  st.id = id;
  st.formula = F(f);
  st.rule = r;
  st.args = std::move(a);
  return st;
}

CheckResult check(theories::TheoryId th, const std::vector<ProofStep>& p, const std::string& goal) {
  return check_proof(theories::axioms_of(th), {}, p, F(goal));
}

}  // namespace

TEST_CASE("successor axiom instance") {
  std::vector<ProofStep> p = {
      step(1, "all n:N. ~(S(n)=0)", Rule::Axiom, {{}, {}, "succ-i"}),
      step(2, "~(S(0)=0)", Rule::Inst, {{1}, Term::zero(), ""}),
  };
  auto r = check(theories::TheoryId::COM_fcn, p, "~(S(0)=0)");
  CHECK_MESSAGE(r.ok, r.message);
  // wrong instance
  p[1].args.term = syntax::numeral(1);
  r = check(theories::TheoryId::COM_fcn, p, "~(S(0)=0)");
  CHECK(!r.ok);
  CHECK(r.failing_step == 2);
  CHECK(r.error == ErrorKind::RuleMismatch);
}

TEST_CASE("reflexivity of a numeral") {
  std::vector<ProofStep> p = {step(1, "S(S(S(0)))=S(S(S(0)))", Rule::Refl, {{}, syntax::numeral(3), ""})};
  CHECK(check(theories::TheoryId::COM_fcn, p, "S(S(S(0)))=S(S(S(0)))").ok);
}

TEST_CASE("forward reference is rejected") {
  std::vector<ProofStep> p = {
      step(1, "0=0", Rule::Refl, {{}, Term::zero(), ""}),
      step(2, "0=0", Rule::Sym, {{7}, {}, ""}),
  };
  auto r = check(theories::TheoryId::COM_fcn, p, "0=0");
  CHECK(!r.ok);
  CHECK(r.error == ErrorKind::BadStepReference);
  CHECK(r.failing_step == 2);
  p[1].args.refs = {2};
  CHECK(check(theories::TheoryId::COM_fcn, p, "0=0").error == ErrorKind::BadStepReference);
}

TEST_CASE("tautology checker") {
  Formula phi = F("n=0"), psi = F("m=0");
  CHECK(taut_check({phi}, Formula::disj(phi, psi)));
  CHECK(taut_check({}, Formula::implies(phi, phi)));
  CHECK(!taut_check({Formula::disj(phi, psi)}, phi));
  // quantified subformulas are opaque up to renaming of bound variables
  CHECK(taut_check({F("all m:N. f(m)=0")}, F("all k:N. f(k)=0")));
  CHECK(!taut_check({}, F("(all m:N. f(m)=0) -> f(0)=0")));
  std::vector<Formula> many;
  for (int i = 0; i < 21; ++i) many.push_back(Formula::eq(syntax::numeral(i), Term::var("n")));
  CHECK_THROWS_AS(taut_check(many, phi), TautTooLarge);
  // 20 letters is still allowed
  many.pop_back();
  CHECK(taut_check(many, many.back()));
  CHECK(count_letters(many) == 20);
}

TEST_CASE("equality rules") {
  std::vector<ProofStep> p = {
      step(1, "all n:N. ~(S(n)=0)", Rule::Axiom, {{}, {}, "succ-i"}),
      step(2, "n=n", Rule::Refl, {{}, T("n"), ""}),
      step(3, "S(n)=S(n)", Rule::Cong, {{2}, syntax::parse_context_term("S(_)", ctx()), ""}),
      step(4, "S(n)=S(n)", Rule::Trans, {{3, 3}, {}, ""}),
      step(5, "S(n)=S(n)", Rule::Sym, {{4}, {}, ""}),
  };
  CHECK(check(theories::TheoryId::COM_fcn, p, "S(n)=S(n)").ok);
  p[2].args.term = syntax::parse_context_term("f(_)", ctx());
  CHECK(!check(theories::TheoryId::COM_fcn, p, "S(n)=S(n)").ok);
}

TEST_CASE("quantifier rules and side conditions") {
  // from n=n infer all n. n=n
  std::vector<ProofStep> p = {
      step(1, "n=n", Rule::Refl, {{}, T("n"), ""}),
      step(2, "all n:N. n=n", Rule::Gen, {{1}, {}, "n"}),
      step(3, "ex m:N. m=m", Rule::ExIntro, {{1}, T("n"), ""}),
  };
  auto r = check(theories::TheoryId::COM_fcn, p, "ex k:N. k=k");
  CHECK_MESSAGE(r.ok, r.message);

  // ExRule with the variable free in the consequent
  std::vector<ProofStep> q = {
      step(1, "n=0 -> n=0", Rule::Taut),
      step(2, "(ex n:N. n=0) -> n=0", Rule::ExRule, {{1}, {}, "n"}),
  };
  r = check(theories::TheoryId::COM_fcn, q, "(ex n:N. n=0) -> n=0");
  CHECK(r.error == ErrorKind::SideConditionViolated);
  q[0] = step(1, "n=0 -> 0=0", Rule::Taut);
  CHECK(!check(theories::TheoryId::COM_fcn, q, "(ex n:N. n=0) -> 0=0").ok);  // 0=0 is not a tautology
  q.insert(q.begin(), step(0, "0=0", Rule::Refl, {{}, Term::zero(), ""}));
  q[1] = step(1, "n=0 -> 0=0", Rule::Taut, {{0}, {}, ""});
  q[2] = step(2, "(ex n:N. n=0) -> 0=0", Rule::ExRule, {{1}, {}, "n"});
  CHECK(check(theories::TheoryId::COM_fcn, q, "(ex n:N. n=0) -> 0=0").ok);
}

TEST_CASE("function instantiation checks sorts") {
  syntax::Context c{{"k", syntax::Sort::F1}, {"h", syntax::Sort::F2}};
  auto th = theories::axioms_of(theories::TheoryId::COM_fcn);
  std::vector<ProofStep> p;
  ProofStep s1;
  s1.id = 1;
  s1.formula = th.find("comp-ii")->formula;
  s1.rule = Rule::Axiom;
  s1.args.name = "comp-ii";
  p.push_back(s1);
  REQUIRE(s1.formula.sort() == syntax::Sort::F1);
  ProofStep s2;
  s2.id = 2;
  s2.formula = syntax::rename_function(s1.formula.body(), s1.formula.var(), "k");
  s2.rule = Rule::InstF;
  s2.args.refs = {1};
  s2.args.name = "k";
  p.push_back(s2);
  CHECK(check_proof(th, {}, p, s2.formula, &c).ok);
  p[1].args.name = "h";
  p[1].formula = syntax::rename_function(s1.formula.body(), s1.formula.var(), "h");
  CHECK(!check_proof(th, {}, p, p[1].formula, &c).ok);
}

TEST_CASE("leibniz instances") {
  Term s = T("n"), t = T("S(0)");
  CHECK(leibniz_instance(F("f(n)=n"), F("f(S(0))=n"), s, t));
  CHECK(leibniz_instance(F("f(n)=n"), F("f(n)=n"), s, t));
  CHECK(!leibniz_instance(F("f(n)=n"), F("f(S(0))=0"), s, t));
  // occurrences under a binder of n are not free
  CHECK(!leibniz_instance(F("all n:N. f(n)=0"), F("all n:N. f(S(0))=0"), s, t));
  CHECK(leibniz_instance(F("all m:N. f(n)=m"), F("all m:N. f(S(0))=m"), s, t));
  CHECK(!leibniz_instance(F("all m:N. f(n)=m"), F("all m:N. f(S(0))=m"), s, T("m")));
}

TEST_CASE("goal is matched up to bound names") {
  std::vector<ProofStep> p = {
      step(1, "n=n", Rule::Refl, {{}, T("n"), ""}),
      step(2, "all n:N. n=n", Rule::Gen, {{1}, {}, "n"}),
  };
  CHECK(check(theories::TheoryId::COM_fcn, p, "all q:N. q=q").ok);
  auto r = check(theories::TheoryId::COM_fcn, p, "all q:N. q=0");
  CHECK(r.error == ErrorKind::GoalMismatch);
}

TEST_CASE("unknown axiom") {
  std::vector<ProofStep> p = {step(1, "0=0", Rule::Axiom, {{}, {}, "nope"})};
  CHECK(check(theories::TheoryId::ETF, p, "0=0").error == ErrorKind::AxiomUnknown);
  // perm is not part of COM_fcn
  auto perm = theories::axioms_of(theories::TheoryId::ETF).find("perm")->formula;
  ProofStep st;
  st.id = 1;
  st.formula = perm;
  st.rule = Rule::Axiom;
  st.args.name = "perm";
  CHECK(check_proof(theories::axioms_of(theories::TheoryId::COM_fcn), {}, {st}, perm).error == ErrorKind::AxiomUnknown);
  CHECK(check_proof(theories::axioms_of(theories::TheoryId::ETF), {}, {st}, perm).ok);
}

TEST_CASE("proof scripts") {
  const std::string text = R"js({
    "context": [{"name": "n", "sort": "N"}],
    "theory": "COM_fcn",
    "premises": [],
    "goal": "~(S(0)=0)",
    "steps": [
      {"id": 1, "formula": "all n:N. ~(S(n)=0)", "rule": "axiom", "args": {"name": "succ-i"}},
      {"id": 2, "formula": "~(S(0)=0)", "rule": "inst", "args": {"of": 1, "term": "0"}}
    ]})js";
  ProofScript s = parse_script(text);
  auto r = check_script(s);
  CHECK_MESSAGE(r.ok, r.message);
  ProofScript again = parse_script(to_json(s));
  CHECK(to_json(again) == to_json(s));
  CHECK(check_script(again).ok);

  CHECK_THROWS_AS(parse_script("{"), ScriptError);
  CHECK_THROWS_AS(parse_script(R"({"goal":"0=0","steps":[{"id":1,"formula":"0=0","rule":"magic"}]})"), ScriptError);
  CHECK_THROWS_AS(parse_script(R"({"goal":"0=","steps":[]})"), ScriptError);
  ProofScript bad = parse_script(R"({"goal":"0=0","premises":["NOPE"],"steps":[]})");
  CHECK(check_script(bad).error == ErrorKind::AxiomUnknown);
}

TEST_CASE("determinism") {
  std::vector<ProofStep> p = {
      step(1, "all n:N. ~(S(n)=0)", Rule::Axiom, {{}, {}, "succ-i"}),
      step(2, "~(S(0)=0)", Rule::Inst, {{1}, syntax::numeral(2), ""}),
  };
  auto a = check(theories::TheoryId::COM_fcn, p, "~(S(0)=0)");
  auto b = check(theories::TheoryId::COM_fcn, p, "~(S(0)=0)");
  CHECK(a.message == b.message);
  CHECK(a.failing_step == b.failing_step);
}
