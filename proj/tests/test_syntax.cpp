#include "doctest.h"
#include "etf/random_syntax.hpp"
#include "etf/syntax.hpp"

using namespace etf::syntax;

namespace {
Context ctx() {
  return Context{{"g", Sort::F2}, {"f", Sort::F1}, {"h", Sort::F3}, {"m", Sort::N}, {"n", Sort::N}, {"r", Sort::N}};
}
}  // namespace

TEST_CASE("parse terms") {
  CHECK(parse_term("0", ctx()).is_zero());
  Term two = parse_term("S(S(0))", ctx());
  CHECK(two == numeral(2));
  Term t = parse_term("g(m, S(0))", ctx());
  REQUIRE(t.is_app());
  CHECK(t.name() == "g");
  CHECK(t.args().size() == 2);
  CHECK(t.arg(0) == Term::var("m"));
  CHECK(t.arg(1) == Term::succ(Term::zero()));
  CHECK_THROWS_AS(parse_term("g(m)", ctx()), SortError);
  CHECK_THROWS_AS(parse_term("m(0)", ctx()), SortError);
  CHECK_THROWS_AS(parse_term("f", ctx()), SortError);
  CHECK_THROWS_AS(parse_term("zz", ctx()), UnboundVariable);
  CHECK_THROWS_AS(parse_term("S(0", ctx()), SyntaxError);
  CHECK_THROWS_AS(parse_term("1", ctx()), SyntaxError);
}

TEST_CASE("syntax errors report a position") {
  try {
    parse_formula("0=0 & ", ctx());
    FAIL("expected error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("parse formulas with precedence and scope") {
  Formula f = parse_formula("S(n)=0 -> 0=S(0)", ctx());
  CHECK(f == Formula::implies(Formula::eq(Term::succ(Term::var("n")), Term::zero()),
                              Formula::eq(Term::zero(), numeral(1))));
  Formula q = parse_formula("all n:N. ex m:N. S(m)=n", Context{});
  CHECK(q == Formula::forall("n", Sort::N,
                             Formula::exists("m", Sort::N, Formula::eq(Term::succ(Term::var("m")), Term::var("n")))));
  CHECK(parse_formula("ex! m:N. f(m)=n", ctx()).kind() == Formula::Kind::ExistsUnique);

  // & binds tighter than |, which binds tighter than ->, then <->
  Formula p = parse_formula("0=0 | 0=0 & m=0 -> n=0 <-> r=0", ctx());
  CHECK(p.kind() == Formula::Kind::Iff);
  CHECK(p.left().kind() == Formula::Kind::Implies);
  CHECK(p.left().left().kind() == Formula::Kind::Or);
  CHECK(p.left().left().right().kind() == Formula::Kind::And);
  // -> is right associative
  Formula a = parse_formula("m=0 -> n=0 -> r=0", ctx());
  CHECK(a.right().kind() == Formula::Kind::Implies);
  // quantifier scope extends to the right
  Formula s = parse_formula("m=0 & all n:N. n=0 | n=m", ctx());
  CHECK(s.kind() == Formula::Kind::And);
  CHECK(s.right().body().kind() == Formula::Kind::Or);
  // bound function variables
  Formula b = parse_formula("all k:F2. k(m,n)=k(n,m)", ctx());
  CHECK(b.sort() == Sort::F2);
  CHECK_THROWS_AS(parse_formula("all k:F2. k(m)=0", ctx()), SortError);
  CHECK_THROWS_AS(parse_formula("all k:F4. 0=0", ctx()), SyntaxError);
}

TEST_CASE("print canonical text") {
  CHECK(print(numeral(2)) == "S(S(0))");
  CHECK(print(Formula::eq(Term::zero(), Term::zero())) == "0=0");
  CHECK(print(parse_formula("~(n=0)", ctx())) == "~(n=0)");
  CHECK(print(parse_formula("(all n:N. n=0) & m=0", ctx())) == "(all n:N. n=0) & m=0");
  CHECK(print(parse_formula("m=0 -> (n=0 -> r=0)", ctx())) == "m=0 -> n=0 -> r=0");
  CHECK(print(parse_formula("(m=0 -> n=0) -> r=0", ctx())) == "(m=0 -> n=0) -> r=0");
}

TEST_CASE("round trip on random terms and formulas") {
  Signature sig{{"m", "n", "r"}, {{"f", 1}, {"g", 2}, {"h", 3}}};
  SyntaxGen gen(sig, 20240611);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(6);
    CHECK(parse_term(print(t), ctx()) == t);
  }
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.formula(6);
    INFO(print(f));
    CHECK(parse_formula(print(f), ctx()) == f);
  }
}

TEST_CASE("malformed inputs never yield a malformed term") {
  const char* bad[] = {"g(m,n,r)", "h(m)", "f(m,n)", "S(m,n)", "g(,)", "S()", "g(m n)", "m(n)", "f(f)", "S"};
  for (const char* s : bad) {
    INFO(s);
    bool threw = false;
    try {
      parse_term(s, ctx());
    } catch (const SortError&) {
      threw = true;
    } catch (const SyntaxError&) {
      threw = true;
    }
    CHECK(threw);
  }
}

TEST_CASE("numerals") {
  CHECK(numeral(0).is_zero());
  CHECK(numeral(1) == Term::succ(Term::zero()));
  CHECK(numeral_value(numeral(5)) == 5u);
  CHECK(!numeral_value(Term::var("n")));
}

TEST_CASE("free variables") {
  CHECK(free_vars(Term::zero()).empty());
  Formula e = parse_formula("f(n)=0", ctx());
  CHECK(free_vars(e) == FreeVars{{"f", Sort::F1}, {"n", Sort::N}});
  Formula q = parse_formula("all n:N. n=m", ctx());
  CHECK(free_vars(q) == FreeVars{{"m", Sort::N}});
  auto ordered = free_vars_ordered(parse_formula("g(r,m)=f(n) & n=r", ctx()));
  REQUIRE(ordered.size() == 5);
  CHECK(ordered[0].first == "g");
  CHECK(ordered[1].first == "r");
  CHECK(ordered[2].first == "m");
  CHECK(ordered[3].first == "f");
  CHECK(ordered[4].first == "n");
}

TEST_CASE("capture-avoiding substitution") {
  Formula e = Formula::eq(Term::var("n"), Term::zero());
  CHECK(substitute(e, "n", numeral(2)) == Formula::eq(numeral(2), Term::zero()));
  Formula q = Formula::forall("n", Sort::N, Formula::eq(Term::var("n"), Term::var("m")));
  Formula r = substitute(q, "m", Term::succ(Term::var("n")));
  CHECK(r == Formula::forall("n1", Sort::N, Formula::eq(Term::var("n1"), Term::succ(Term::var("n")))));
  Term t = parse_term("g(n,S(m))", ctx());
  CHECK(substitute(t, "n", Term::var("n")) == t);
  CHECK_THROWS_AS(substitute(parse_formula("f(n)=0", ctx()), "f", Term::zero()), SortError);
  // bound occurrences are untouched
  CHECK(substitute(q, "n", Term::zero()) == q);
}

TEST_CASE("function renaming avoids capture") {
  Formula f = parse_formula("all g:F1. g(n)=f(n)", ctx());
  Formula r = rename_function(f, "f", "g");
  CHECK(r.var() != "g");
  CHECK(r.body().rhs().name() == "g");
  CHECK(r.body().lhs().name() == r.var());
}

TEST_CASE("desugar exists-unique") {
  Formula f = parse_formula("ex! m:N. f(m)=n", ctx());
  Formula d = desugar(f);
  CHECK(print(d) == "ex m:N. f(m)=n & all m1:N. f(m1)=n -> m1=m");
  CHECK(d == parse_formula("ex m:N. (f(m)=n & all m1:N. (f(m1)=n -> m1=m))", ctx()));
  Formula plain = parse_formula("all n:N. n=n", ctx());
  CHECK(desugar(plain) == plain);
  Formula nested = parse_formula("ex! m:N. ex! r:N. g(m,r)=n", ctx());
  CHECK(!has_exists_unique(desugar(nested)));
  Formula fn = desugar(parse_formula("ex! k:F1. all m:N. k(m)=m", ctx()));
  CHECK(!has_exists_unique(fn));
  CHECK(print(fn) == "ex k:F1. (all m:N. k(m)=m) & all k1:F1. (all m:N. k1(m)=m) -> all a1:N. k1(a1)=k(a1)");
}

TEST_CASE("alpha equivalence") {
  Formula a = parse_formula("all n:N. ex m:N. g(n,m)=r", ctx());
  Formula b = parse_formula("all x:N. ex y:N. g(x,y)=r", ctx());
  Formula c = parse_formula("all x:N. ex y:N. g(y,x)=r", ctx());
  CHECK(alpha_equal(a, b));
  CHECK(!alpha_equal(a, c));
  CHECK(alpha_key(a) == alpha_key(b));
  CHECK(alpha_key(a) != alpha_key(c));
  // a free variable is not alpha equal to a bound one of the same name
  CHECK(!alpha_equal(parse_formula("all n:N. n=m", ctx()), parse_formula("all m:N. m=m", ctx())));
}

TEST_CASE("context files") {
  Context c = Context::parse_file_text("decl g : F2\n# comment\ndecl m:N\n\ndecl n : N\n");
  CHECK(c.lookup("g") == Sort::F2);
  CHECK(c.lookup("m") == Sort::N);
  CHECK(c.declarations().size() == 3);
  CHECK_THROWS(Context::parse_file_text("decl g : F7\n"));
  CHECK_THROWS(Context::parse_file_text("let g : F2\n"));
  CHECK_THROWS(Context::parse_file_text("decl g : F2\ndecl g : N\n"));
}
