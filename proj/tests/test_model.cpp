#include "doctest.h"
#include "etf/model/arith.hpp"
#include "etf/model/builtins.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"
#include "etf/model/search.hpp"
#include "etf/model/witness.hpp"
#include "etf/random_syntax.hpp"
#include "etf/theories.hpp"

using namespace etf;
using namespace etf::model;
using syntax::Formula;
using syntax::Term;

namespace {

FuncValue identity() { return fix_nr(proj(0), Nat(0), Nat(0)); }
FuncValue double_fn() { return native(1, "double", [](const Nat* x) { return x[0] * Nat(2); }, {}, 1); }
Nat N(std::uint64_t v) { return Nat(v); }

syntax::Context ctx(const Env& env) { return env_context(env); }

}  // namespace

TEST_CASE("term evaluation") {
  Env env;
  CHECK(eval_term(syntax::numeral(5), env) == N(5));
  env.set("g", arith_oracle().plus).set("m", N(4));
  CHECK(eval_term(syntax::parse_term("g(m,S(0))", ctx(env)), env) == N(5));
  env.set("f", arith(Basis::Wpra).fprime);
  CHECK(eval_term(syntax::parse_term("f(0)", ctx(env)), env) == N(0));
  CHECK_THROWS_AS(eval_term(Term::var("zz"), env), syntax::UnboundVariable);
}

TEST_CASE("open formulas and bounded checking") {
  Env env;
  syntax::Context c{{"n", syntax::Sort::N}};
  CHECK(eval_open(syntax::parse_formula("0=0", c), env));
  for (int n = 0; n < 10; ++n) {
    env.set("n", N(n));
    CHECK(!eval_open(syntax::parse_formula("S(n)=0", c), env));
  }
  Env empty;
  CHECK(!bounded_check(syntax::parse_formula("all n:N. ex m:N. S(m)=n", {}), empty, 5));
  CHECK(bounded_check(syntax::parse_formula("all n:N. (~(n=0) -> ex m:N. S(m)=n)", {}), empty, 25));
  Formula perm = syntax::parse_formula("all n:N. f(g(n))=n", {{"f", syntax::Sort::F1}, {"g", syntax::Sort::F1}});
  Env fe;
  fe.set("f", identity()).set("g", identity());
  CHECK(bounded_check(perm, fe, 25));
  CHECK_THROWS_AS(bounded_check(syntax::parse_formula("ex f:F1. f(0)=0", {}), empty, 3), FunctionQuantifier);
  // exists-unique is expanded on the fly
  CHECK(bounded_check(syntax::parse_formula("all n:N. ex! m:N. S(m)=S(n)", {}), empty, 6));
  CHECK(!bounded_check(syntax::parse_formula("ex! m:N. 0=0", {}), empty, 6));
}

TEST_CASE("desugaring preserves truth") {
  syntax::SyntaxGen gen({{"n", "m"}, {}}, 11);
  Env env;
  env.set("n", N(1)).set("m", N(2));
  syntax::Context c{{"n", syntax::Sort::N}, {"m", syntax::Sort::N}};
  for (int i = 0; i < 40; ++i) {
    Formula a = gen.open_formula(2);
    Formula q = Formula::exists_unique("k", syntax::Sort::N, Formula::conj(a, Formula::eq(Term::var("k"), Term::var("n"))));
    CHECK(bounded_check(q, env, 4) == bounded_check(syntax::desugar(q), env, 4));
  }
}

TEST_CASE("substitution lemma") {
  syntax::SyntaxGen gen({{"n", "m"}, {{"plus", 2}, {"sg", 1}}}, 5);
  Env env = arith_env(arith_oracle());
  for (int i = 0; i < 60; ++i) {
    Term t = gen.term(3), s = gen.term(2);
    env.set("n", N(i % 7)).set("m", N(i % 4));
    Env e2 = env;
    e2.set("n", eval_term(s, env));
    CHECK(eval_term(syntax::substitute(t, "n", s), env) == eval_term(t, e2));
  }
}

TEST_CASE("basic combinators") {
  for (int m = 0; m <= 20; ++m) CHECK(const_fn(N(5))(N(m)) == N(5));
  CHECK(proj(1)(N(7), N(9), N(11)) == N(9));
  const Arith& a = arith_oracle();
  FuncValue c = compose(lift2(a.plus), proj(2), lift1(succ_fn()), proj(0));
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n)
      for (int r = 0; r < 5; ++r) CHECK(c(N(m), N(n), N(r)) == N(r + m + 1));
  CHECK(fix_r(proj(2), N(3))(N(1), N(2)) == N(3));
  CHECK(fix_nr(proj(1), N(3), N(4))(N(1)) == N(3));
}

TEST_CASE("primitive recursion and its weak form") {
  // addition: g=id, h=S(r)
  FuncValue h = compose(lift1(succ_fn()), proj(2), proj(2), proj(2));
  FuncValue add = pra(identity(), h);
  CHECK(add(N(3), N(4)) == N(7));
  FuncValue addw = wpra(identity(), h);
  for (int m = 0; m <= 15; ++m)
    for (int n = 0; n <= 15; ++n) CHECK(add(N(m), N(n)) == addw(N(m), N(n)));
  for (int m = 0; m <= 20; ++m) CHECK(add(N(m), N(0)) == N(m));
  FuncValue constant = pra(double_fn(), proj(2));
  for (int n = 0; n <= 20; ++n) CHECK(constant(N(6), N(n)) == N(12));
  // huge counters are summarized, not iterated
  Nat big = Nat::parse("123456789012345678901234567890");
  CHECK(add(N(5), big) == big + N(5));
  CHECK(arith(Basis::Wpra).times(N(3), big) == big * N(3));
  CHECK(arith(Basis::Wpra).odd(big) == N(0));
}

TEST_CASE("translations between the recursion schemes") {
  const Arith& a = arith_oracle();
  FuncValue g = double_fn();
  FuncValue h = compose(lift2(a.plus), proj(2), compose(lift2(a.times), proj(0), proj(1), proj(1)), proj(0));
  auto direct = [&](const Nat& m, std::uint64_t n, bool weak) {
    Nat v = g(m);
    for (std::uint64_t i = 0; i < n; ++i) v = h(m, Nat(weak ? i + 1 : i), v);
    return v;
  };
  FuncValue p = pra_from_wpra(g, h, a.pred), w = wpra_from_pra(g, h);
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n) {
      CHECK(p(N(m), N(n)) == direct(N(m), n, false));
      CHECK(w(N(m), N(n)) == direct(N(m), n, true));
    }
}

TEST_CASE("iteration") {
  FuncValue id = iter(N(0), succ_fn());
  for (int n = 0; n <= 20; ++n) CHECK(id(N(n)) == N(n));
  FuncValue pow2 = iter(N(1), double_fn());
  CHECK(pow2(N(10)) == N(1024));
  FuncValue viaw = iter_via_wpra(N(1), double_fn());
  for (int n = 0; n <= 20; ++n) CHECK(viaw(N(n)) == pow2(N(n)));
}

TEST_CASE("arithmetic from wpra") {
  const Arith& w = arith(Basis::Wpra);
  const std::uint64_t fp[] = {0, 1, 2, 6, 42, 1806};
  for (int n = 0; n < 6; ++n) CHECK(w.fprime(N(n)) == N(fp[n]));
  CHECK(w.fprime(N(1)) == N(1));
  CHECK(w.pred(N(7)) == N(6));
  CHECK(w.pred(N(0)) == N(0));
  CHECK(w.odd(w.fprime(N(3))) == N(0));
  CHECK(w.monus(N(3), N(5)) == N(0));
  CHECK(w.monus(N(5), N(3)) == N(2));
}

TEST_CASE("bases agree with the host oracle") {
  const Arith& o = arith_oracle();
  for (Basis b : {Basis::Wpra, Basis::Pra}) {
    const Arith& a = arith(b);
    const int box = b == Basis::Wpra ? 12 : 25;
    for (int m = 0; m <= box; ++m) {
      CHECK(a.sg(N(m)) == o.sg(N(m)));
      CHECK(a.sgbar(N(m)) == o.sgbar(N(m)));
      CHECK(a.odd(N(m)) == o.odd(N(m)));
      CHECK(a.pred(N(m)) == o.pred(N(m)));
      for (int n = 0; n <= box; ++n) {
        CHECK(a.plus(N(m), N(n)) == o.plus(N(m), N(n)));
        CHECK(a.times(N(m), N(n)) == o.times(N(m), N(n)));
        CHECK(a.monus(N(m), N(n)) == o.monus(N(m), N(n)));
        CHECK(a.lt(N(m), N(n)) == o.lt(N(m), N(n)));
      }
    }
    for (int n = 0; n <= 8; ++n) CHECK(a.fprime(N(n)) == o.fprime(N(n)));
  }
}

TEST_CASE("order function") {
  const Arith& a = arith(Basis::Pra);
  for (int m = 0; m <= 20; ++m) CHECK(a.lt(N(m), N(0)) == N(0));
  CHECK(a.lt(N(2), N(3)) == N(1));
  CHECK(a.lt(N(3), N(3)) == N(0));
  for (int m = 0; m <= 25; ++m)
    for (int n = 0; n <= 25; ++n) CHECK((a.lt(N(m), N(n)) == N(1)) == (m < n));
}

TEST_CASE("conditional definitions") {
  Env env = arith_env(arith(Basis::Pra));
  FuncValue f2 = conditional_fn("n=0", "m", "r", env);
  for (int m = 0; m < 6; ++m)
    for (int n = 0; n < 6; ++n)
      for (int r = 0; r < 6; ++r) CHECK(f2(N(m), N(n), N(r)) == (n == 0 ? N(m) : N(r)));
  FuncValue never = conditional_fn("~(0=0)", "m", "S(r)", env);
  CHECK(never(N(4), N(0), N(2)) == N(3));
}

TEST_CASE("searches") {
  CHECK(invert_function(identity(), N(17)) == N(17));
  CHECK(invert_function(double_fn(), N(8)) == N(4));
  FuncValue plus3 = native(1, "plus3", [](const Nat* x) { return x[0] + Nat(3); }, {}, 1);
  CHECK_THROWS_AS(invert_function(plus3, N(1), 10000), FuelExhausted);
  const Arith& a = arith_oracle();
  FuncValue diff = native(2, "diff", [](const Nat* x) { return monus(x[1], x[0]) + monus(x[0], x[1]); }, {}, 3);
  FuncValue after = native(2, "after", [](const Nat* x) { return x[0] < x[1] ? Nat(0) : Nat(1); }, {}, 3);
  for (int m = 0; m < 10; ++m) {
    Nat mm = N(m);
    CHECK(mu_min(diff, std::span<const Nat>(&mm, 1)) == mm);
    CHECK(mu_min(after, std::span<const Nat>(&mm, 1)) == N(m + 1));
  }
  FuncValue one = fix_r(lift1(const_fn(N(1))), N(0));
  Nat z(0);
  CHECK_THROWS_AS(mu_min(one, std::span<const Nat>(&z, 1), 100), FuelExhausted);
  CHECK(mu_fn(diff)(N(9)) == N(9));
  (void)a;
}

TEST_CASE("memoization is invisible") {
  Arith fresh = make_arith(Basis::Pra);
  std::vector<Nat> with, without;
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n) with.push_back(fresh.monus(N(m), N(n)) + fresh.lt(N(m), N(n)));
  {
    MemoOff off;
    Arith cold = make_arith(Basis::Pra);
    for (int m = 0; m < 12; ++m)
      for (int n = 0; n < 12; ++n) without.push_back(cold.monus(N(m), N(n)) + cold.lt(N(m), N(n)));
  }
  CHECK(with == without);
  CHECK(memo_enabled());
}

TEST_CASE("internalized terms") {
  Env env = arith_env(arith_oracle());
  env.set("k", N(4));
  syntax::Context c = env_context(env);
  c.declare("m", syntax::Sort::N);
  c.declare("n", syntax::Sort::N);
  c.declare("r", syntax::Sort::N);
  Term t = syntax::parse_term("plus(times(m,S(k)),monus(r,n))", c);
  FuncValue f = internalize_fn(t, {"m", "n", "r"}, env);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int r = 0; r <= 4; ++r) {
        Env e = env;
        e.set("m", N(m)).set("n", N(n)).set("r", N(r));
        CHECK(f(N(m), N(n), N(r)) == eval_term(t, e));
      }
}

TEST_CASE("builtins and env files") {
  Env env = parse_env("# sample\nn = 5\nf = builtin:plus\nc = builtin:const:7\n");
  CHECK(env.numbers.at("n") == N(5));
  CHECK(env.functions.at("f")(N(2), N(3)) == N(5));
  CHECK(env.functions.at("c")(N(100)) == N(7));
  for (const char* name : {"plus", "times", "sg", "sgbar", "odd", "fprime", "pred", "monus", "lt", "t", "pair", "p1",
                           "p2", "q", "identity", "double"})
    CHECK(builtin(name));
  CHECK(builtin("double")(N(21)) == N(42));
  CHECK(builtin("q")(N(9)) == N(4));
  CHECK_THROWS_AS(parse_env("n 5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_env("f = builtin:nope"), std::invalid_argument);
}

TEST_CASE("axioms and statements hold in the model") {
  FunctionWitnesses w = standard_witnesses();
  Env env;
  env.set("lt", arith_oracle().lt);
  for (const auto& ax : theories::axioms_of(theories::TheoryId::ETF).axioms) {
    INFO(ax.name);
    CHECK(bounded_check(ax.formula, env, 4, w));
  }
  for (const auto& name : theories::statement_names()) {
    INFO(name);
    CHECK(bounded_check(theories::statement(name).formula, env, 4, w));
  }
}
