#pragma once

// Trusted checker for Hilbert-style proofs.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etf/syntax.hpp"
#include "etf/theories.hpp"

namespace etf::kernel {

enum class Rule {
  Axiom,
  Taut,
  MP,
  Gen,
  Inst,
  InstF,
  ExIntro,
  ExRule,
  Refl,
  Sym,
  Trans,
  Cong,
  // (all x. phi) -> phi[w/x]
  InstAx,
  // phi[w/x] -> ex x. phi
  ExAx,
  // from psi -> phi infer psi -> all x. phi, x not free in psi
  GenImp,
  // s=t -> (phi -> phi'), phi' replacing some free occurrences of s by t
  Leibniz,
};

std::string to_string(Rule r);
Rule parse_rule(const std::string& s);  // throws std::invalid_argument

struct RuleArgs {
  // Step references. Taut: premises. MP: {minor, major}. Trans: {left, right}.
  // Single-premise rules: {of}.
  std::vector<int> refs;
  // Inst/ExIntro/InstAx/ExAx number witness, Refl term, Cong context (with hole).
  std::optional<syntax::Term> term;
  // Axiom/premise name, Gen/ExRule/GenImp variable, or a function-variable witness.
  std::string name;
};

struct ProofStep {
  int id = 0;
  syntax::Formula formula = syntax::Formula::eq(syntax::Term::zero(), syntax::Term::zero());
  Rule rule = Rule::Taut;
  RuleArgs args;
};

enum class ErrorKind {
  None,
  BadStepReference,
  SideConditionViolated,
  TautTooLarge,
  AxiomUnknown,
  RuleMismatch,
  GoalMismatch,
  Malformed,
};

std::string to_string(ErrorKind k);

struct CheckResult {
  bool ok = false;
  std::optional<int> failing_step;
  std::string message;
  ErrorKind error = ErrorKind::None;
};

class TautTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxTautLetters = 20;

// True iff the conjunction of premises implies target propositionally, with
// equations and quantified subformulas (up to alpha-equivalence) as letters.
bool taut_check(const std::vector<syntax::Formula>& premises, const syntax::Formula& target);
int count_letters(const std::vector<syntax::Formula>& fs);

// `ctx`, when given, is used to check the sorts of function-variable witnesses
// and the free variables of instantiation terms.
CheckResult check_proof(const theories::Theory& theory, const std::vector<theories::Statement>& premises,
                        const std::vector<ProofStep>& proof, const syntax::Formula& goal,
                        const syntax::Context* ctx = nullptr);

// True when phi2 arises from phi1 by replacing some free occurrences of s by t.
bool leibniz_instance(const syntax::Formula& phi1, const syntax::Formula& phi2, const syntax::Term& s,
                      const syntax::Term& t);

}  // namespace etf::kernel
