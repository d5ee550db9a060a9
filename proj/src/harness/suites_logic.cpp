// COMPILE and KERNEL: the formula compiler against the evaluator, and proofs
// produced by the tactics or taken from the corpus, checked by the kernel
// together with mutated copies that it must reject.

#include "corpus.hpp"
#include "etf/model/arith.hpp"
#include "etf/model/combinators.hpp"
#include "etf/proof_builder.hpp"
#include "etf/random_syntax.hpp"
#include "etf/tactics.hpp"
#include "suite.hpp"

namespace etf::harness::detail {

namespace {

using kernel::ProofScript;
using kernel::ProofStep;
using kernel::Rule;
using model::FuncValue;
using syntax::Formula;
using syntax::Sort;
using syntax::Term;
using U = std::uint64_t;

// --- compiler helpers

const syntax::Signature kArithSignature = {
    {"n", "m", "r"},
    {{"plus", 2}, {"times", 2}, {"sg", 1}, {"sgbar", 1}, {"odd", 1}, {"monus", 2}, {"pred", 1}}};

// Calls `visit(n, m, r)` over [0,B]^3 until it returns a failure.
ClaimResult over_box(U B, const std::function<ClaimResult(U, U, U)>& visit) {
  for (U n = 0; n <= B; ++n)
    for (U m = 0; m <= B; ++m)
      for (U r = 0; r <= B; ++r) {
        ClaimResult res = visit(n, m, r);
        if (res.status == Status::Fail) return res;
      }
  return pass();
}

model::Env at(model::Env env, U n, U m, U r) {
  env.set("n", Nat(n)).set("m", Nat(m)).set("r", Nat(r));
  return env;
}

Assignment where(const std::string& what, U n, U m, U r) {
  return {{"formula", what}, {"n", num(n)}, {"m", num(m)}, {"r", num(r)}};
}

// Random singular formula: a combination of equations t=k.
Formula random_singular(syntax::SyntaxGen& gen, int depth) {
  auto& g = gen.rng();
  if (depth == 0 || g() % 3 == 0) return Formula::eq(gen.term(3), syntax::numeral(g() % 4));
  const Formula a = random_singular(gen, depth - 1);
  switch (g() % 4) {
    case 0: return Formula::neg(a);
    case 1: return Formula::conj(a, random_singular(gen, depth - 1));
    case 2: return Formula::disj(a, random_singular(gen, depth - 1));
    default: return Formula::implies(a, random_singular(gen, depth - 1));
  }
}

// t=0 becomes sgbar(t)=1 and t=k (k>=2) becomes P^(k-1)(t)=1.
Formula to_unit_form(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Eq: {
      const auto k = syntax::numeral_value(f.rhs());
      if (!k) throw std::invalid_argument("not singular: " + syntax::print(f));
      Term t = f.lhs();
      if (*k == 0) return Formula::eq(Term::app("sgbar", {t}), syntax::numeral(1));
      for (U i = 1; i < *k; ++i) t = Term::app("pred", {t});
      return Formula::eq(t, syntax::numeral(1));
    }
    case K::Not: return Formula::neg(to_unit_form(f.sub()));
    case K::And: return Formula::conj(to_unit_form(f.left()), to_unit_form(f.right()));
    case K::Or: return Formula::disj(to_unit_form(f.left()), to_unit_form(f.right()));
    case K::Implies: return Formula::implies(to_unit_form(f.left()), to_unit_form(f.right()));
    case K::Iff: return Formula::iff(to_unit_form(f.left()), to_unit_form(f.right()));
    default: throw tactics::NotOpen("not open: " + syntax::print(f));
  }
}

bool unit_atoms_only(const Formula& f) {
  using K = Formula::Kind;
  if (f.kind() == K::Eq) return syntax::numeral_value(f.rhs()) == 1u;
  if (f.kind() == K::Not) return unit_atoms_only(f.sub());
  return unit_atoms_only(f.left()) && unit_atoms_only(f.right());
}

// --- kernel helpers

bool accepted(const ProofScript& s) {
  try {
    return kernel::check_script(s).ok;
  } catch (const std::exception&) {
    return false;
  }
}

struct Mutant {
  std::string description;
  ProofScript script;
};

// Every single-argument mutation of every step that has arguments.
std::vector<Mutant> mutants(const ProofScript& s) {
  std::vector<Mutant> out;
  const theories::Theory theory = theories::axioms_of(s.theory);
  std::vector<theories::Statement> named;
  for (const auto& a : theory.axioms) named.push_back({a.name, a.formula});
  for (const auto& p : s.premises)
    if (auto st = theories::lookup_premise(p)) named.push_back(*st);

  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const ProofStep& step = s.steps[i];
    auto push = [&](std::string what, const std::function<void(kernel::RuleArgs&)>& edit) {
      Mutant m{"step " + std::to_string(step.id) + " (" + kernel::to_string(step.rule) + "): " + what, s};
      edit(m.script.steps[i].args);
      out.push_back(std::move(m));
    };
    for (std::size_t j = 0; j < step.args.refs.size(); ++j) {
      const int ref = step.args.refs[j];
      // a tautology hypothesis the step does not need says nothing when swapped
      if (step.rule == Rule::Taut) {
        ProofScript dropped = s;
        auto& refs = dropped.steps[i].args.refs;
        refs.erase(refs.begin() + static_cast<std::ptrdiff_t>(j));
        if (accepted(dropped)) continue;
      }
      const ProofStep* old = nullptr;
      for (std::size_t k = 0; k < i; ++k)
        if (s.steps[k].id == ref) old = &s.steps[k];
      for (std::size_t k = 0; k < i; ++k) {
        if (s.steps[k].id == ref) continue;
        if (old && syntax::alpha_equal(s.steps[k].formula, old->formula)) continue;
        const int to = s.steps[k].id;
        push("reference " + std::to_string(ref) + " -> " + std::to_string(to),
             [j, to](kernel::RuleArgs& a) { a.refs[j] = to; });
        break;
      }
    }
    if (step.args.term)
      push("term " + syntax::print(*step.args.term) + " -> S(...)",
           [](kernel::RuleArgs& a) { a.term = Term::succ(*a.term); });
    if (!step.args.name.empty()) {
      std::string other = step.args.name + "_mut";
      if (step.rule == Rule::Axiom) {
        const theories::Statement* cur = nullptr;
        for (const auto& n : named)
          if (n.name == step.args.name) cur = &n;
        for (const auto& n : named)
          if (!cur || !syntax::alpha_equal(n.formula, cur->formula)) {
            other = n.name;
            break;
          }
      }
      push("name " + step.args.name + " -> " + other, [other](kernel::RuleArgs& a) { a.name = other; });
    }
  }
  return out;
}

// Checks the script and that every mutant is rejected.
ClaimResult check_with_mutants(const ProofScript& s, const std::string& what) {
  const auto r = kernel::check_script(s);
  if (!r.ok) return fail({{"proof", what}}, "rejected: " + r.message);
  for (const auto& m : mutants(s))
    if (accepted(m.script)) return fail({{"proof", what}, {"mutation", m.description}}, "mutated proof accepted");
  return pass();
}

ProofScript load(std::string_view name) { return kernel::parse_script(std::string(corpus_script(name))); }

// ex f. all v0..v(a-1). f(v0..)=t
bool internalization_goal(const Formula& goal, const Term& t, const std::array<std::string, 3>& vars, int arity) {
  static const Sort sorts[] = {Sort::F1, Sort::F2, Sort::F3};
  if (goal.kind() != Formula::Kind::Exists || goal.sort() != sorts[arity - 1]) return false;
  Formula body = goal.body();
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) {
    if (body.kind() != Formula::Kind::Forall || body.var() != vars[static_cast<std::size_t>(i)]) return false;
    args.push_back(Term::var(vars[static_cast<std::size_t>(i)]));
    body = body.body();
  }
  return body.kind() == Formula::Kind::Eq && body.lhs() == Term::app(goal.var(), args) && body.rhs() == t;
}

syntax::Context internal_context() {
  return {{"m", Sort::N}, {"n", Sort::N}, {"r", Sort::N}, {"k", Sort::N},
          {"g", Sort::F3}, {"p", Sort::F2}, {"u", Sort::F1}};
}

model::Env internal_env() {
  model::Env env;
  env.set("k", Nat(3));
  env.set("g", model::native(3, "g", [](const Nat* a) { return a[0] + Nat(2) * a[1] + a[2]; }));
  env.set("p", model::native(2, "p", [](const Nat* a) { return a[0] * a[1] + Nat(1); }));
  env.set("u", model::native(1, "u", [](const Nat* a) { return a[0] + Nat(5); }));
  return env;
}

// Seeded terms for internalization at the given arity.
ClaimResult internalization_claim(const Context& c, int arity, int count, U B, bool mutate) {
  const std::array<std::string, 3> vars = arity == 3   ? std::array<std::string, 3>{"m", "n", "r"}
                                          : arity == 2 ? std::array<std::string, 3>{"m", "n", "r"}
                                                       : std::array<std::string, 3>{"n", "m", "r"};
  std::vector<std::string> numbers(vars.begin(), vars.begin() + arity);
  numbers.push_back("k");
  syntax::SyntaxGen gen({numbers, {{"g", 3}, {"p", 2}, {"u", 1}}},
                        c.options().seed * 7919 + static_cast<U>(arity));
  const syntax::Context ctx = internal_context();
  const model::Env env = c.env(internal_env());
  for (int i = 0; i < count; ++i) {
    const Term t = gen.term(4);
    const std::string shown = syntax::print(t);
    const auto d = tactics::internalize_proof(t, vars, ctx, arity);
    if (!internalization_goal(d.goal, t, vars, arity))
      return fail({{"term", shown}}, "wrong statement " + syntax::print(d.goal));
    ClaimResult r = mutate ? check_with_mutants(d.script(), shown) : pass();
    if (!mutate) {
      const auto v = d.check();
      if (!v.ok) return fail({{"term", shown}}, "rejected: " + v.message);
    }
    if (r.status == Status::Fail) return r;
    const FuncValue w = tactics::internalize(t, vars, ctx, env).witness;
    const U B2 = arity >= 2 ? B : 0, B3 = arity == 3 ? B : 0;
    for (U a = 0; a <= B; ++a)
      for (U b = 0; b <= B2; ++b)
        for (U e = 0; e <= B3; ++e) {
          model::Env here = env;
          here.set(vars[0], Nat(a)).set(vars[1], Nat(b)).set(vars[2], Nat(e));
          const Nat want = model::eval_term(t, here), got = w(Nat(a), Nat(b), Nat(e));
          if (got != want)
            return fail({{"term", shown}, {vars[0], num(a)}, {vars[1], num(b)}, {vars[2], num(e)}},
                        "witness gives " + got.str() + ", term " + want.str());
        }
  }
  return pass();
}

// Induction on position `pos` of an `arity`-place function variable h:
// h(.., plus(n,0), ..) = h(.., n, ..), with base and step proved by congruence.
ClaimResult position_induction(int arity, int pos) {
  static const Sort sorts[] = {Sort::F1, Sort::F2, Sort::F3};
  static const char* others[] = {"k", "m"};
  const Term X = Term::var("n");
  auto shape = [&](const Term& at) {
    std::vector<Term> args;
    int o = 0;
    for (int i = 0; i < arity; ++i) args.push_back(i == pos ? at : Term::var(others[o++]));
    return Term::app("h", args);
  };
  const Term s = shape(Term::app("plus", {X, Term::zero()})), t = shape(X);
  const Term ctx_term = shape(syntax::hole());
  const std::vector<theories::Statement> prem = {*theories::lookup_premise("def-plus")};
  const auto theory = theories::axioms_of(theories::TheoryId::COMI_fcn);

  auto plus_zero = [&](tactics::ProofBuilder& b, const Term& at) {
    const int inst = b.inst(b.axiom("def-plus"), at);
    return b.taut(Formula::eq(Term::app("plus", {at, Term::zero()}), at), {inst});
  };
  tactics::ProofBuilder base(theory, prem);
  base.cong(plus_zero(base, Term::zero()), ctx_term);

  tactics::ProofBuilder step(theory, prem);
  const int e = step.cong(plus_zero(step, Term::succ(X)), ctx_term);
  const int imp = step.taut(Formula::implies(Formula::eq(s, t), step.formula(e)), {e});
  step.gen(imp, "n");

  const auto d = tactics::equational_induction(s, t, "n", base.take(), step.take(), {"def-plus"});
  const auto r = d.check();
  const std::string what = "h:" + std::string(arity == 1 ? "F1" : arity == 2 ? "F2" : "F3") + " at argument " +
                           std::to_string(pos + 1);
  (void)sorts;
  if (!r.ok) return fail({{"induction", what}}, "rejected: " + r.message);
  if (!syntax::alpha_equal(d.goal, Formula::forall("n", Sort::N, Formula::eq(s, t))))
    return fail({{"induction", what}}, "wrong conclusion " + syntax::print(d.goal));
  return pass();
}

// Corpus base/step pair through open induction.
ClaimResult corpus_open_induction(const std::string& stem) {
  const ProofScript base = load(stem + "_base"), step = load(stem + "_step");
  const Formula phi = step.goal.body().left();
  const std::string x = step.goal.var();
  const auto d = tactics::open_induction(phi, x, base.steps, step.steps, step.premises);
  const auto r = d.check();
  if (!r.ok) return fail({{"proof", stem}}, "rejected: " + r.message);
  if (!syntax::alpha_equal(d.goal, Formula::forall(x, Sort::N, phi)))
    return fail({{"proof", stem}}, "wrong conclusion " + syntax::print(d.goal));
  return pass();
}

}  // namespace

SuiteDef suite_compile(const Options& opt) {
  const U B = main_bound(opt, 6);
  SuiteDef s;
  s.bounds = {{"n", B}, {"formulas", 200}};

  s.claims.push_back({"L8.xxvii", [B](const Context& c) {
                        syntax::SyntaxGen gen(kArithSignature, c.options().seed);
                        const model::Env env = c.env(model::arith_env(model::arith_oracle()));
                        for (int i = 0; i < 200; ++i) {
                          const Formula phi = gen.open_formula(4);
                          const Term tau = tactics::compile_term(phi), dm = tactics::compile_term_demorgan(phi);
                          const std::string shown = syntax::print(phi);
                          ClaimResult r = over_box(B, [&](U n, U m, U r) {
                            const model::Env e = at(env, n, m, r);
                            const bool truth = model::eval_open(phi, e);
                            if (truth != model::eval_term(tau, e).is_zero())
                              return fail(where(shown, n, m, r), "compiled term disagrees");
                            if (truth != model::eval_term(dm, e).is_zero())
                              return fail(where(shown, n, m, r), "De Morgan route disagrees");
                            return pass();
                          });
                          if (r.status == Status::Fail) return r;
                          r = check_compilation_proof(phi);
                          if (r.status == Status::Fail) return r;
                        }
                        return pass();
                      }});
  s.claims.push_back({"L8.xii", [B](const Context& c) {
                        syntax::SyntaxGen gen(kArithSignature, c.options().seed + 1);
                        const model::Env env = c.env(model::arith_env(model::arith_oracle()));
                        for (int i = 0; i < 50; ++i) {
                          const Formula phi = random_singular(gen, 3);
                          const Term tau = tactics::compile_term_singular(phi);
                          const std::string shown = syntax::print(phi);
                          ClaimResult r = over_box(B, [&](U n, U m, U r) {
                            const model::Env e = at(env, n, m, r);
                            if (model::eval_open(phi, e) != model::eval_term(tau, e).is_zero())
                              return fail(where(shown, n, m, r), "singular compilation disagrees");
                            return pass();
                          });
                          if (r.status == Status::Fail) return r;
                        }
                        return pass();
                      }});
  s.claims.push_back({"L8.xi", [B](const Context& c) {
                        syntax::SyntaxGen gen(kArithSignature, c.options().seed + 2);
                        const model::Env env = c.env(model::arith_env(model::arith_oracle()));
                        for (int i = 0; i < 50; ++i) {
                          const Formula phi = random_singular(gen, 3);
                          const Formula unit = to_unit_form(phi);
                          const std::string shown = syntax::print(phi);
                          if (!unit_atoms_only(unit)) return fail({{"formula", shown}}, "an equation is not t=1");
                          ClaimResult r = over_box(B, [&](U n, U m, U r) {
                            const model::Env e = at(env, n, m, r);
                            if (model::eval_open(phi, e) != model::eval_open(unit, e))
                              return fail(where(shown, n, m, r), "t=1 form disagrees: " + syntax::print(unit));
                            return pass();
                          });
                          if (r.status == Status::Fail) return r;
                        }
                        return pass();
                      }});
  return s;
}

SuiteDef suite_kernel(const Options& opt) {
  const U B = main_bound(opt, 8);
  SuiteDef s;
  s.bounds = {{"n", B}, {"terms", 25}};

  s.claims.push_back({"L1.i", [B](const Context& c) { return internalization_claim(c, 3, 25, B, true); }});
  s.claims.push_back({"L1.ii", [B](const Context& c) { return internalization_claim(c, 2, 10, B, true); }});
  s.claims.push_back({"L1.iii", [B](const Context& c) { return internalization_claim(c, 1, 10, B, true); }});

  const std::vector<std::pair<int, int>> positions = {{1, 0}, {2, 1}, {2, 0}, {3, 2}, {3, 1}, {3, 0}};
  static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi"};
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const auto [arity, pos] = positions[i];
    s.claims.push_back({std::string("L2.") + roman[i], [arity, pos](const Context&) {
                          return position_induction(arity, pos);
                        }});
  }

  s.claims.push_back({"L3", [](const Context&) {
                        for (const auto& e : corpus()) {
                          ClaimResult r = check_with_mutants(load(e.name), std::string(e.name));
                          if (r.status == Status::Fail) return r;
                        }
                        struct Eq {
                          const char *stem, *s, *t;
                        };
                        for (const Eq& q : {Eq{"succ_plus", "plus(n,S(0))", "S(n)"}, Eq{"monus_zero", "monus(0,n)", "0"}}) {
                          const ProofScript base = load(std::string(q.stem) + "_base");
                          const ProofScript step = load(std::string(q.stem) + "_step");
                          const auto d = tactics::equational_induction(syntax::parse_term(q.s, step.context),
                                                                       syntax::parse_term(q.t, step.context), "n",
                                                                       base.steps, step.steps, step.premises);
                          const auto r = d.check();
                          if (!r.ok) return fail({{"proof", q.stem}}, "induction rejected: " + r.message);
                          ClaimResult m = check_with_mutants(d.script(), std::string(q.stem) + " by induction");
                          if (m.status == Status::Fail) return m;
                        }
                        return pass();
                      }});
  s.claims.push_back({"L8.xiii", [](const Context&) { return corpus_open_induction("pred_zero"); }});
  s.claims.push_back({"L8.xxviii", [](const Context&) { return corpus_open_induction("plus_zero"); }});
  s.claims.push_back({"L11.iv", [](const Context&) { return corpus_open_induction("zero_le"); }});
  return s;
}

}  // namespace etf::harness::detail
