#include <set>

#include "doctest.h"
#include "etf/theories.hpp"

using namespace etf::syntax;
using namespace etf::theories;

TEST_CASE("axiom counts per system") {
  CHECK(axioms_of(TheoryId::COM_fcn).axioms.size() == 13);
  CHECK(axioms_of(TheoryId::COMI_fcn).axioms.size() == 14);
  CHECK(axioms_of(TheoryId::PRA_fcn).axioms.size() == 15);
  CHECK(axioms_of(TheoryId::ETF).axioms.size() == 16);
}

TEST_CASE("axioms are closed and desugared") {
  for (const auto& a : axioms_of(TheoryId::ETF).axioms) {
    INFO(a.name);
    CHECK(free_vars(a.formula).empty());
    CHECK(!has_exists_unique(a.formula));
  }
  for (const auto& n : statement_names()) {
    INFO(n);
    Statement s = statement(n);
    CHECK(!has_exists_unique(s.formula));
    for (const auto& [name, sort] : free_vars(s.formula)) CHECK(name == "lt");
  }
}

TEST_CASE("containment of systems") {
  auto keys = [](TheoryId id) {
    std::set<std::string> out;
    for (const auto& a : axioms_of(id).axioms) out.insert(print(a.formula));
    return out;
  };
  auto com = keys(TheoryId::COM_fcn), comi = keys(TheoryId::COMI_fcn), pra = keys(TheoryId::PRA_fcn),
       etf = keys(TheoryId::ETF);
  for (const auto& k : com) CHECK(comi.count(k));
  for (const auto& k : comi) CHECK(pra.count(k));
  for (const auto& k : pra) CHECK(etf.count(k));
  CHECK(com.size() < comi.size());
  CHECK(comi.size() < pra.size());
  CHECK(pra.size() < etf.size());
}

TEST_CASE("axiom texts") {
  Theory com = axioms_of(TheoryId::COM_fcn);
  CHECK(print(com.find("succ-i")->formula) == "all n:N. ~(S(n)=0)");
  CHECK(print(com.find("comp-iv")->formula) == "all g:F3. all n:N. all r:N. ex f:F1. all m:N. f(m)=g(m,n,r)");
  CHECK(print(com.find("comp-iii")->formula) == "all g:F3. all r:N. ex f:F2. all m:N. all n:N. f(m,n)=g(m,n,r)");
  Theory etf = axioms_of(TheoryId::ETF);
  CHECK(print(etf.find("ind")->formula) ==
        "all f:F1. all g:F1. all n:N. f(0)=g(0) & (all n:N. f(n)=g(n) -> f(S(n))=g(S(n))) -> f(n)=g(n)");
  CHECK(print(etf.find("perm")->formula) ==
        "all f:F1. (all n:N. ex m:N. f(m)=n & all m1:N. f(m1)=n -> m1=m) -> ex g:F1. all n:N. f(g(n))=n");
  CHECK(com.find("ind") == nullptr);
}

TEST_CASE("statements") {
  CHECK(print(statement("WPRA").formula) ==
        "all g:F1. all h:F3. ex f:F2. all m:N. f(m,0)=g(m) & all n:N. f(m,S(n))=h(m,S(n),f(m,n))");
  CHECK(statement("MIN2").formula.kind() == Formula::Kind::Forall);
  CHECK(statement("MIN2").formula.var() == "f");
  CHECK_THROWS(statement("MIN4"));
  CHECK(lookup_premise("def-pred").has_value());
  CHECK(!lookup_premise("nonsense").has_value());
}

TEST_CASE("classify") {
  Context c{{"f", Sort::F1}, {"g", Sort::F1}, {"n", Sort::N}, {"m", Sort::N}};
  CHECK(classify(parse_formula("f(n)=S(0) & ~(m=0)", c)) == FormulaClass::SingularOpen);
  CHECK(classify(parse_formula("f(n)=g(n)", c)) == FormulaClass::Open);
  CHECK(classify(parse_formula("all n:N. n=n", c)) == FormulaClass::General);
}

TEST_CASE("export is stable") {
  std::string a = export_theory(TheoryId::ETF);
  CHECK(a == export_theory(TheoryId::ETF));
  CHECK(a.find("succ-i : all n:N. ~(S(n)=0)\n") == 0);
}
