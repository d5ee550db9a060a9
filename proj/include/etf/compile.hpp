#pragma once

// Open formulas to terms: phi holds exactly when the compiled term is 0.

#include <stdexcept>
#include <string>
#include <vector>

#include "etf/syntax.hpp"

namespace etf::tactics {

class NotOpen : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompiledFormula {
  syntax::Formula source;
  syntax::Term term;
  // Defining equations of every reserved name the term (or source) relies on,
  // closed under dependencies, with their premise names.
  std::vector<syntax::Formula> premise_axioms;
  std::vector<std::string> premise_names;
};

// s=t -> plus(monus(s,t),monus(t,s)); ~ -> sgbar; & -> plus; | -> times;
// -> and <-> through their definitions.
CompiledFormula compile_open_formula(const syntax::Formula& phi);

// Term of the main route without premise bookkeeping.
syntax::Term compile_term(const syntax::Formula& phi);

// Disjunction as sgbar(plus(sgbar(a),sgbar(b))); used as a cross-check.
syntax::Term compile_term_demorgan(const syntax::Formula& phi);

// Singular open formulas only: an equation with 0 on one side compiles to its
// other side. Throws NotOpen for quantifiers and std::invalid_argument when
// some equation has no numeral side.
syntax::Term compile_term_singular(const syntax::Formula& phi);

// Reserved names used by `t`, closed under the dependencies of their
// defining equations, in signature order.
std::vector<std::string> defined_names_needed(const syntax::Term& t);

}  // namespace etf::tactics
