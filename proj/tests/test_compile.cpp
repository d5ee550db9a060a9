#include "doctest.h"
#include "etf/compile.hpp"
#include "etf/model/arith.hpp"
#include "etf/random_syntax.hpp"
#include "etf/tactics.hpp"

using namespace etf;
using syntax::Formula;
using syntax::Term;

namespace {

syntax::Context ctx() {
  syntax::Context c = theories::defined_context();
  for (const char* v : {"n", "m", "r"})
    if (!c.contains(v)) c.declare(v, syntax::Sort::N);
  return c;
}

Formula F(const std::string& s) { return syntax::parse_formula(s, ctx()); }

model::Env at(std::uint64_t n, std::uint64_t m, std::uint64_t r) {
  model::Env env = model::arith_env(model::arith_oracle());
  env.set("n", Nat(n)).set("m", Nat(m)).set("r", Nat(r));
  return env;
}

// phi holds exactly where the term is 0, over [0,B]^3
bool agrees(const Formula& phi, const Term& t, std::uint64_t B) {
  for (std::uint64_t n = 0; n <= B; ++n)
    for (std::uint64_t m = 0; m <= B; ++m)
      for (std::uint64_t r = 0; r <= B; ++r) {
        const auto env = at(n, m, r);
        if (model::eval_open(phi, env) != model::eval_term(t, env).is_zero()) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("equation compiles to the symmetric difference") {
  CHECK(syntax::print(tactics::compile_term(F("n=m"))) == "plus(monus(n,m),monus(m,n))");
  CHECK(agrees(F("n=m"), tactics::compile_term(F("n=m")), 5));
}

TEST_CASE("connectives") {
  for (const char* text : {"~(n=m)", "n=0 & m=S(0)", "n=0 | m=r", "n=m -> m=r", "n=m <-> S(n)=S(m)",
                           "~(n=0 | m=0) & (r=n -> ~(r=m))"}) {
    CAPTURE(text);
    const Formula phi = F(text);
    CHECK(agrees(phi, tactics::compile_term(phi), 4));
    CHECK(agrees(phi, tactics::compile_term_demorgan(phi), 4));
  }
}

TEST_CASE("singular route") {
  const Formula phi = F("n=0 & ~(m=0)");
  CHECK(agrees(phi, tactics::compile_term_singular(phi), 4));
  CHECK_THROWS_AS(tactics::compile_term_singular(F("n=m")), std::invalid_argument);
}

TEST_CASE("quantifiers are rejected") {
  CHECK_THROWS_AS(tactics::compile_term(F("all n:N. n=n")), tactics::NotOpen);
  CHECK_THROWS_AS(tactics::compile_term_demorgan(F("ex m:N. m=n")), tactics::NotOpen);
}

TEST_CASE("premises of the compiled term") {
  const auto c = tactics::compile_open_formula(F("~(n=m)"));
  CHECK(std::find(c.premise_names.begin(), c.premise_names.end(), "def-monus") != c.premise_names.end());
  CHECK(std::find(c.premise_names.begin(), c.premise_names.end(), "def-sgbar") != c.premise_names.end());
  CHECK(c.premise_axioms.size() == c.premise_names.size());
}

TEST_CASE("random open formulas") {
  syntax::SyntaxGen gen({{"n", "m", "r"}, {{"plus", 2}, {"times", 2}, {"sg", 1}, {"monus", 2}, {"pred", 1}}}, 11);
  for (int i = 0; i < 30; ++i) {
    const Formula phi = gen.open_formula(3);
    CAPTURE(syntax::print(phi));
    CHECK(agrees(phi, tactics::compile_term(phi), 3));
  }
}

TEST_CASE("compilation equivalence is a checked proof") {
  for (const char* text : {"n=m", "~(n=0) -> pred(n)=m", "n=0 | m=0"}) {
    CAPTURE(text);
    const auto d = tactics::compilation_equivalence(F(text));
    const auto r = d.check();
    CHECK_MESSAGE(r.ok, r.message);
  }
}
