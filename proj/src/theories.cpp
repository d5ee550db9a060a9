#include "etf/theories.hpp"

#include <map>
#include <stdexcept>

namespace etf::theories {

using syntax::Context;
using syntax::Formula;
using syntax::Sort;

std::string to_string(TheoryId id) {
  switch (id) {
    case TheoryId::COM_fcn: return "COM_fcn";
    case TheoryId::COMI_fcn: return "COMI_fcn";
    case TheoryId::PRA_fcn: return "PRA_fcn";
    case TheoryId::ETF: return "ETF";
  }
  return "?";
}

TheoryId parse_theory_id(const std::string& s) {
  if (s == "COM_fcn" || s == "COM") return TheoryId::COM_fcn;
  if (s == "COMI_fcn" || s == "COMI") return TheoryId::COMI_fcn;
  if (s == "PRA_fcn" || s == "PRA") return TheoryId::PRA_fcn;
  if (s == "ETF") return TheoryId::ETF;
  throw std::invalid_argument("unknown theory '" + s + "'");
}

const Axiom* Theory::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

namespace {

Formula closed(const std::string& text, const Context& ctx) {
  return syntax::desugar(syntax::universal_closure(syntax::parse_formula(text, ctx)));
}

const Context& schema_ctx() {
  static const Context c{{"m", Sort::N},  {"n", Sort::N},   {"r", Sort::N},   {"f1", Sort::F1},
                         {"g1", Sort::F1}, {"g2", Sort::F2}, {"g3", Sort::F3}, {"h", Sort::F3},
                         {"h1", Sort::F3}, {"h2", Sort::F3}, {"h3", Sort::F3}};
  return c;
}

// Schema texts use g1/g2/g3/f1 for the function variables of each arity; the
// stored axioms rename them to the conventional single-letter names.
Formula axiom_formula(std::string text) {
  Formula f = syntax::parse_formula(text, schema_ctx());
  for (const char* from : {"g1", "g2", "g3"}) f = syntax::rename_function(f, from, "g");
  f = syntax::rename_function(f, "f1", "f");
  return syntax::desugar(syntax::universal_closure(f));
}

std::vector<Axiom> com_axioms() {
  return {
      {"succ-i", axiom_formula("~(S(n)=0)")},
      {"succ-ii", axiom_formula("S(n)=S(m) -> n=m")},
      {"succ-iii", axiom_formula("~(n=0) -> ex m:N. S(m)=n")},
      {"init-i", axiom_formula("ex f:F1. all m:N. f(m)=n")},
      {"init-ii", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=m")},
      {"init-iii", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=n")},
      {"init-iv", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=r")},
      {"init-v", axiom_formula("ex f:F1. all n:N. f(n)=S(n)")},
      {"comp-i", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=g2(m,n)")},
      {"comp-ii", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=g1(m)")},
      {"comp-iii", axiom_formula("ex f:F2. all m:N. all n:N. f(m,n)=g3(m,n,r)")},
      {"comp-iv", axiom_formula("ex f:F1. all m:N. f(m)=g3(m,n,r)")},
      {"comp-v", axiom_formula("ex f:F3. all m:N. all n:N. all r:N. f(m,n,r)=g3(h1(m,n,r),h2(m,n,r),h3(m,n,r))")},
  };
}

Axiom induction_axiom() {
  return {"ind", axiom_formula("f1(0)=g1(0) & (all n:N. f1(n)=g1(n) -> f1(S(n))=g1(S(n))) -> f1(n)=g1(n)")};
}

Axiom pra_axiom() {
  return {"pra", axiom_formula("ex f:F2. all m:N. f(m,0)=g1(m) & all n:N. f(m,S(n))=h(m,n,f(m,n))")};
}

Axiom perm_axiom() {
  return {"perm", axiom_formula("(all n:N. ex! m:N. f1(m)=n) -> ex g:F1. all n:N. f1(g(n))=n")};
}

Formula close_over(const std::string& var, Sort s, const std::string& text, const Context& ctx) {
  return Formula::forall(var, s, syntax::desugar(syntax::parse_formula(text, ctx)));
}

const std::map<std::string, Statement>& premise_table() {
  static const std::map<std::string, Statement> table = [] {
    std::map<std::string, Statement> t;
    auto add = [&](const std::string& name, Formula f) { t.emplace(name, Statement{name, std::move(f)}); };

    Context base = defined_context();
    add("WPRA", closed("ex f:F2. all m:N. f(m,0)=g(m) & all n:N. f(m,S(n))=h(m,S(n),f(m,n))",
                       Context{{"g", Sort::F1}, {"h", Sort::F3}}));
    add("MIN1", closed("(all m:N. ex! n:N. f(m,n)=0) -> ex g:F1. all m:N. f(m,g(m))=0", Context{{"f", Sort::F2}}));
    Context m2{{"f", Sort::F2}, {"lt", Sort::F2}};
    add("MIN2", close_over("f", Sort::F2,
                           "(all m:N. ex n:N. f(m,n)=0) -> "
                           "ex g:F1. all m:N. f(m,g(m))=0 & all r:N. lt(r,g(m))=S(0) -> ~(f(m,r)=0)",
                           m2));
    Context m3{{"f", Sort::F3}, {"lt", Sort::F2}};
    add("MIN3", close_over("f", Sort::F3,
                           "(all m:N. all n:N. ex r:N. f(m,n,r)=0) -> "
                           "ex g:F2. all m:N. all n:N. f(m,n,g(m,n))=0 & all k:N. lt(k,g(m,n))=S(0) -> ~(f(m,n,k)=0)",
                           m3));
    add("PERM", closed("(all n:N. ex! m:N. f(m)=n) -> ex g:F1. all n:N. f(g(n))=n", Context{{"f", Sort::F1}}));

    // defining equations; function names stay free, number variables are closed
    auto def = [&](const std::string& name, const std::string& text) {
      Formula f = syntax::parse_formula(text, base);
      auto fv = syntax::free_vars_ordered(f);
      for (std::size_t i = fv.size(); i-- > 0;)
        if (fv[i].second == Sort::N) f = Formula::forall(fv[i].first, Sort::N, f);
      add(name, f);
    };
    def("def-plus", "plus(m,0)=m & all n:N. plus(m,S(n))=S(plus(m,n))");
    def("def-times", "times(m,0)=0 & all n:N. times(m,S(n))=plus(times(m,n),m)");
    def("def-sg", "sg(0)=0 & all n:N. sg(S(n))=S(0)");
    def("def-sgbar", "sgbar(0)=S(0) & all n:N. sgbar(S(n))=0");
    def("def-odd", "odd(0)=0 & all n:N. odd(S(n))=sgbar(odd(n))");
    def("def-fprime", "fprime(0)=0 & all n:N. fprime(S(n))=plus(sgbar(fprime(n)),times(fprime(n),S(fprime(n))))");
    def("def-pred", "pred(0)=0 & all n:N. pred(S(n))=times(sgbar(odd(fprime(S(n)))),S(pred(n)))");
    def("def-monus", "monus(m,0)=m & all n:N. monus(m,S(n))=pred(monus(m,n))");
    def("def-lt",
        "(all m:N. lt(m,0)=0) & all m:N. all n:N. (lt(m,S(n))=S(0) <-> lt(m,n)=S(0) | m=n) & "
        "(lt(m,S(n))=0 <-> ~(lt(m,n)=S(0)) & ~(m=n))");

    def("eqz-eq", "n=m <-> plus(monus(n,m),monus(m,n))=0");
    def("eqz-not", "~(n=0) <-> sgbar(n)=0");
    def("eqz-and", "n=0 & m=0 <-> plus(n,m)=0");
    def("eqz-or", "n=0 | m=0 <-> times(n,m)=0");
    def("pred-succ", "pred(S(n))=n");
    return t;
  }();
  return table;
}

}  // namespace

Theory axioms_of(TheoryId id) {
  Theory t{id, com_axioms()};
  if (id == TheoryId::COM_fcn) return t;
  t.axioms.push_back(induction_axiom());
  if (id == TheoryId::COMI_fcn) return t;
  t.axioms.push_back(pra_axiom());
  if (id == TheoryId::PRA_fcn) return t;
  t.axioms.push_back(perm_axiom());
  return t;
}

const std::vector<std::string>& statement_names() {
  static const std::vector<std::string> names{"WPRA", "MIN1", "MIN2", "MIN3", "PERM"};
  return names;
}

Statement statement(const std::string& name) {
  for (const auto& n : statement_names())
    if (n == name) return premise_table().at(name);
  throw std::invalid_argument("unknown statement '" + name + "'");
}

std::optional<Statement> lookup_premise(const std::string& name) {
  auto it = premise_table().find(name);
  if (it == premise_table().end()) return std::nullopt;
  return it->second;
}

const std::vector<std::string>& premise_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : premise_table()) out.push_back(k);
    return out;
  }();
  return names;
}

const std::vector<std::pair<std::string, Sort>>& defined_signature() {
  static const std::vector<std::pair<std::string, Sort>> sig{
      {"plus", Sort::F2}, {"times", Sort::F2}, {"sg", Sort::F1},   {"sgbar", Sort::F1}, {"odd", Sort::F1},
      {"fprime", Sort::F1}, {"pred", Sort::F1}, {"monus", Sort::F2}, {"lt", Sort::F2}};
  return sig;
}

Context defined_context() {
  Context c;
  for (const auto& [n, s] : defined_signature()) c.declare(n, s);
  c.declare("m", Sort::N);
  c.declare("n", Sort::N);
  c.declare("r", Sort::N);
  return c;
}

namespace {

bool singular_eqs(const Formula& f) {
  if (f.kind() == Formula::Kind::Eq)
    return syntax::numeral_value(f.lhs()).has_value() || syntax::numeral_value(f.rhs()).has_value();
  if (!singular_eqs(f.sub(0))) return false;
  return !f.is_binary() || singular_eqs(f.sub(1));
}

}  // namespace

FormulaClass classify(const Formula& f) {
  if (!syntax::is_open(f)) return FormulaClass::General;
  return singular_eqs(f) ? FormulaClass::SingularOpen : FormulaClass::Open;
}

std::string to_string(FormulaClass c) {
  switch (c) {
    case FormulaClass::Open: return "open";
    case FormulaClass::SingularOpen: return "singular-open";
    case FormulaClass::General: return "general";
  }
  return "?";
}

std::string export_theory(TheoryId id) {
  std::string out;
  for (const auto& a : axioms_of(id).axioms) out += a.name + " : " + syntax::print(a.formula) + "\n";
  return out;
}

}  // namespace etf::theories
