#include "etf/compile.hpp"

#include <set>

#include "etf/theories.hpp"

namespace etf::tactics {

using syntax::Formula;
using syntax::Term;
using K = Formula::Kind;

namespace {

Term app(const char* f, std::vector<Term> args) { return Term::app(f, std::move(args)); }

Term atom(const Term& s, const Term& t) { return app("plus", {app("monus", {s, t}), app("monus", {t, s})}); }

enum class Route { Product, DeMorgan, Singular };

Term compile(const Formula& f, Route route) {
  switch (f.kind()) {
    case K::Eq:
      if (route == Route::Singular) {
        if (f.rhs().is_zero()) return f.lhs();
        if (f.lhs().is_zero()) return f.rhs();
        if (!syntax::numeral_value(f.lhs()) && !syntax::numeral_value(f.rhs()))
          throw std::invalid_argument("equation " + syntax::print(f) + " has no numeral side");
      }
      return atom(f.lhs(), f.rhs());
    case K::Not: return app("sgbar", {compile(f.sub(), route)});
    case K::And: return app("plus", {compile(f.left(), route), compile(f.right(), route)});
    case K::Or: {
      Term a = compile(f.left(), route), b = compile(f.right(), route);
      if (route == Route::DeMorgan) return app("sgbar", {app("plus", {app("sgbar", {a}), app("sgbar", {b})})});
      return app("times", {a, b});
    }
    case K::Implies: return compile(Formula::disj(Formula::neg(f.left()), f.right()), route);
    case K::Iff:
      return compile(Formula::conj(Formula::implies(f.left(), f.right()), Formula::implies(f.right(), f.left())), route);
    default: throw NotOpen("cannot compile quantified formula " + syntax::print(f));
  }
}

void collect_fns(const Term& t, std::set<std::string>& out) {
  if (t.is_app()) out.insert(t.name());
  for (const auto& a : t.args()) collect_fns(a, out);
}

void collect_fns(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == K::Eq) {
    collect_fns(f.lhs(), out);
    collect_fns(f.rhs(), out);
    return;
  }
  collect_fns(f.sub(0), out);
  if (f.is_binary()) collect_fns(f.sub(1), out);
}

bool reserved(const std::string& n) {
  for (const auto& [name, sort] : theories::defined_signature())
    if (name == n) return true;
  return false;
}

std::vector<std::string> closure(std::set<std::string> seeds) {
  std::set<std::string> done;
  std::vector<std::string> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    std::string n = work.back();
    work.pop_back();
    if (!reserved(n) || !done.insert(n).second) continue;
    std::set<std::string> deps;
    collect_fns(theories::lookup_premise("def-" + n)->formula, deps);
    for (const auto& d : deps) work.push_back(d);
  }
  std::vector<std::string> out;
  for (const auto& [name, sort] : theories::defined_signature())
    if (done.count(name)) out.push_back(name);
  return out;
}

}  // namespace

Term compile_term(const Formula& phi) { return compile(phi, Route::Product); }
Term compile_term_demorgan(const Formula& phi) { return compile(phi, Route::DeMorgan); }
Term compile_term_singular(const Formula& phi) { return compile(phi, Route::Singular); }

std::vector<std::string> defined_names_needed(const Term& t) {
  std::set<std::string> s;
  collect_fns(t, s);
  return closure(std::move(s));
}

CompiledFormula compile_open_formula(const Formula& phi) {
  CompiledFormula out{phi, compile_term(phi), {}, {}};
  std::set<std::string> used;
  collect_fns(out.term, used);
  collect_fns(phi, used);
  for (const auto& n : closure(std::move(used))) {
    out.premise_names.push_back("def-" + n);
    out.premise_axioms.push_back(theories::lookup_premise("def-" + n)->formula);
  }
  return out;
}

}  // namespace etf::tactics
