#pragma once

// Axiom systems and named statements as closed formulas.

#include <optional>
#include <string>
#include <vector>

#include "etf/syntax.hpp"

namespace etf::theories {

enum class TheoryId { COM_fcn, COMI_fcn, PRA_fcn, ETF };

std::string to_string(TheoryId id);
TheoryId parse_theory_id(const std::string& s);  // throws std::invalid_argument

struct Axiom {
  std::string name;
  syntax::Formula formula;
};

struct Theory {
  TheoryId id;
  std::vector<Axiom> axioms;

  const Axiom* find(const std::string& name) const;
};

// Statements and other named premises that can be added to a theory.
struct Statement {
  std::string name;
  syntax::Formula formula;
};

Theory axioms_of(TheoryId id);

// WPRA, MIN1, MIN2, MIN3, PERM.
Statement statement(const std::string& name);
const std::vector<std::string>& statement_names();

// Defining equations of the reserved arithmetic names (def-plus ... def-lt)
// and the compilation lemmas (eqz-*) used by open induction, plus the
// statements above. nullopt for unknown names.
std::optional<Statement> lookup_premise(const std::string& name);
const std::vector<std::string>& premise_names();

// Reserved function names with their sorts, in a fixed order.
const std::vector<std::pair<std::string, syntax::Sort>>& defined_signature();
syntax::Context defined_context();

enum class FormulaClass { Open, SingularOpen, General };
FormulaClass classify(const syntax::Formula& f);
std::string to_string(FormulaClass c);

// "name : formula" lines.
std::string export_theory(TheoryId id);

}  // namespace etf::theories
