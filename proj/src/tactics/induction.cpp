#include <algorithm>

#include "etf/model/arith.hpp"
#include "etf/tactics.hpp"
#include "internalizer.hpp"

namespace etf::tactics {

using K = Formula::Kind;

namespace {

const std::vector<std::string> kCompilationLemmas = {"eqz-eq", "eqz-not", "eqz-and", "eqz-or"};

std::vector<theories::Statement> resolve(const std::vector<std::string>& names) {
  std::vector<theories::Statement> out;
  for (const auto& n : names) {
    auto p = theories::lookup_premise(n);
    if (!p) throw std::invalid_argument("unknown premise '" + n + "'");
    out.push_back(*p);
  }
  return out;
}

std::vector<std::string> merged(std::vector<std::string> a, const std::vector<std::string>& b) {
  for (const auto& n : b)
    if (std::find(a.begin(), a.end(), n) == a.end()) a.push_back(n);
  return a;
}

// Checks a supplied proof on its own and compares its conclusion.
void expect_proof(const Proof& p, const Formula& shape, const std::vector<std::string>& premises, const char* what) {
  if (p.empty()) throw PremiseMismatch(std::string(what) + " proof is empty");
  if (!syntax::alpha_equal(p.back().formula, shape))
    throw PremiseMismatch(std::string(what) + " proof concludes " + syntax::print(p.back().formula) + ", expected " +
                          syntax::print(shape));
  kernel::CheckResult r;
  try {
    kernel::ProofScript s;
    s.context = kernel::infer_context(shape, p);
    s.theory = theories::TheoryId::COMI_fcn;
    s.premises = premises;
    s.goal = shape;
    s.steps = p;
    r = kernel::check_script(s);
  } catch (const syntax::SortError& e) {
    throw PremiseMismatch(std::string(what) + " proof: " + e.what());
  }
  if (!r.ok) throw PremiseMismatch(std::string(what) + " proof does not check: " + r.message);
}

Formula step_shape(const Formula& phi, const std::string& x) {
  return Formula::forall(x, Sort::N,
                         Formula::implies(phi, syntax::substitute(phi, x, Term::succ(Term::var(x)))));
}

// all x. s=t from steps proving s[0/x]=t[0/x] and all x.(s=t -> s'=t').
int induction_core(ProofBuilder& b, const Term& s, const Term& t, const std::string& x, int base, int step) {
  const std::string d1 = b.fresh("d"), d2 = b.fresh("d");
  detail::Internalizer in(b, {x, d1, d2});
  int us = in.prove_unary(s);
  int ut = in.prove_unary(t);
  const std::string F = b.fresh("u"), G = b.fresh("u");
  const Term X = Term::var(x), SX = Term::succ(X), Z = Term::zero();
  const Formula eqFG = Formula::eq(Term::app(F, {X}), Term::app(G, {X}));
  const Formula goal = Formula::forall(x, Sort::N, Formula::eq(s, t));

  return b.assemble({{us, F}, {ut, G}}, [&](const Formula& gamma, const std::vector<Formula>& hyps) {
    const Formula &hf = hyps[0], &hg = hyps[1];
    // F(0)=G(0)
    int f0 = b.inst_under(gamma, hf, {Z});
    int g0 = b.inst_under(gamma, hg, {Z});
    int zero_case = b.trans_under(gamma, b.trans_under(gamma, f0, b.weaken(gamma, base)), b.sym_under(gamma, g0));

    // F(x)=G(x) -> F(Sx)=G(Sx), under gamma & F(x)=G(x)
    const Formula g2 = Formula::conj(gamma, eqFG);
    int fx = b.inst_under(g2, hf, {X});
    int gx = b.inst_under(g2, hg, {X});
    int a = b.taut(Formula::implies(g2, eqFG));
    int st = b.trans_under(g2, b.trans_under(g2, b.sym_under(g2, fx), a), gx);  // s=t
    int inst = b.inst(step, X);
    int st2 = b.taut(Formula::implies(g2, b.formula(inst).right()), {st, inst});
    int fsx = b.inst_under(g2, hf, {SX});
    int gsx = b.inst_under(g2, hg, {SX});
    int succ_case = b.trans_under(g2, b.trans_under(g2, fsx, st2), b.sym_under(g2, gsx));
    int curried = b.taut(Formula::implies(gamma, Formula::implies(eqFG, b.formula(succ_case).right())), {succ_case});
    int step_all = b.gen_imp(curried, x, Sort::N);

    // the induction axiom for F and G at x
    int ind = b.inst(b.instf(b.instf(b.axiom("ind"), F), G), X);
    int fg = b.taut(Formula::implies(gamma, eqFG), {zero_case, step_all, ind});

    int fx1 = b.inst_under(gamma, hf, {X});
    int gx1 = b.inst_under(gamma, hg, {X});
    int eq = b.trans_under(gamma, b.trans_under(gamma, b.sym_under(gamma, fx1), fg), gx1);
    int out = b.gen_imp(eq, x, Sort::N);
    if (!syntax::alpha_equal(b.formula(out).right(), goal)) throw std::logic_error("induction_core: wrong conclusion");
    return out;
  });
}

// phi <-> compile_term(phi)=0
int equivalence(ProofBuilder& b, const Formula& phi) {
  const Term tau = compile_term(phi);
  const Formula target = Formula::iff(phi, Formula::eq(tau, Term::zero()));
  auto lemma = [&](const char* name, std::vector<Term> ws) {
    int id = b.axiom(name);
    for (const auto& w : ws) id = b.inst(id, w);
    return id;
  };
  switch (phi.kind()) {
    case K::Eq: return lemma("eqz-eq", {phi.lhs(), phi.rhs()});
    case K::Not: {
      int a = equivalence(b, phi.sub());
      int l = lemma("eqz-not", {compile_term(phi.sub())});
      return b.taut(target, {a, l});
    }
    case K::And:
    case K::Or: {
      int a = equivalence(b, phi.left()), c = equivalence(b, phi.right());
      int l = lemma(phi.kind() == K::And ? "eqz-and" : "eqz-or", {compile_term(phi.left()), compile_term(phi.right())});
      return b.taut(target, {a, c, l});
    }
    case K::Implies: {
      int a = equivalence(b, Formula::disj(Formula::neg(phi.left()), phi.right()));
      return b.taut(target, {a});
    }
    case K::Iff: {
      int a = equivalence(b, Formula::conj(Formula::implies(phi.left(), phi.right()),
                                           Formula::implies(phi.right(), phi.left())));
      return b.taut(target, {a});
    }
    default: throw NotOpen("cannot compile quantified formula " + syntax::print(phi));
  }
}

}  // namespace

Derivation equational_induction(const Term& s, const Term& t, const std::string& x, const Proof& base,
                                const Proof& step, const std::vector<std::string>& premises) {
  const Term Z = Term::zero();
  const Formula eq = Formula::eq(s, t);
  expect_proof(base, syntax::substitute(eq, x, Z), premises, "base");
  expect_proof(step, step_shape(eq, x), premises, "step");

  ProofBuilder b(theories::axioms_of(theories::TheoryId::COMI_fcn), resolve(premises));
  b.reserve(eq);
  b.reserve(x);
  int base_id = b.append(base);
  int step_id = b.append(step);
  induction_core(b, s, t, x, base_id, step_id);

  Derivation d;
  d.theory = theories::TheoryId::COMI_fcn;
  d.premises = premises;
  d.goal = Formula::forall(x, Sort::N, eq);
  d.steps = b.take();
  return d;
}

Derivation compilation_equivalence(const Formula& phi) {
  if (!syntax::is_open(phi)) throw NotOpen("cannot compile quantified formula " + syntax::print(phi));
  ProofBuilder b(theories::axioms_of(theories::TheoryId::COM_fcn), resolve(kCompilationLemmas));
  equivalence(b, phi);
  Derivation d;
  d.theory = theories::TheoryId::COM_fcn;
  d.premises = kCompilationLemmas;
  d.goal = Formula::iff(phi, Formula::eq(compile_term(phi), Term::zero()));
  d.steps = b.take();
  return d;
}

Derivation open_induction(const Formula& phi, const std::string& x, const Proof& base, const Proof& step,
                          const std::vector<std::string>& premises) {
  if (!syntax::is_open(phi)) throw NotOpen("cannot compile quantified formula " + syntax::print(phi));
  const Term Z = Term::zero(), X = Term::var(x), SX = Term::succ(X);
  expect_proof(base, syntax::substitute(phi, x, Z), premises, "base");
  expect_proof(step, step_shape(phi, x), premises, "step");

  const auto all_premises = merged(premises, kCompilationLemmas);
  ProofBuilder b(theories::axioms_of(theories::TheoryId::COMI_fcn), resolve(all_premises));
  b.reserve(phi);
  b.reserve(x);
  const Term tau = compile_term(phi);
  const Formula zero_eq = Formula::eq(tau, Z);

  int equiv = b.gen(equivalence(b, phi), x);
  int base_id = b.append(base);
  int e0 = b.inst(equiv, Z);
  int base2 = b.taut(syntax::substitute(zero_eq, x, Z), {base_id, e0});

  int step_id = b.inst(b.append(step), X);
  int ex = b.inst(equiv, X);
  int esx = b.inst(equiv, SX);
  int step2 = b.taut(Formula::implies(zero_eq, syntax::substitute(zero_eq, x, SX)), {step_id, ex, esx});
  step2 = b.gen(step2, x);

  int all_zero = induction_core(b, tau, Z, x, base2, step2);
  int here = b.inst(all_zero, X);
  int back = b.taut(phi, {here, ex});
  b.gen(back, x);

  Derivation d;
  d.theory = theories::TheoryId::COMI_fcn;
  d.premises = all_premises;
  d.goal = Formula::forall(x, Sort::N, phi);
  d.steps = b.take();
  return d;
}

ConditionalDef conditional_def(const Formula& phi, const Term& s, const Term& t, const model::Env& env) {
  if (!syntax::is_open(phi)) throw NotOpen("cannot compile quantified formula " + syntax::print(phi));
  ConditionalDef out;
  out.defining_term = Term::app("f2", {s, compile_term(phi), t});
  model::Env full = model::arith_env(model::arith(model::Basis::Pra));
  for (const auto& [n, v] : env.numbers) full.numbers[n] = v;
  for (const auto& [n, f] : env.functions) full.functions[n] = f;
  out.witness = model::internalize_fn(out.defining_term, {"n", "m", "r"}, full);
  return out;
}

}  // namespace etf::tactics
