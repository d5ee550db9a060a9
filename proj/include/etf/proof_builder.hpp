#pragma once

// Incremental construction of kernel proofs. Each method appends one step
// whose conclusion is computed the way the kernel recomputes it, and returns
// the step id. Nothing here is trusted: the result still goes through
// check_proof.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "etf/kernel.hpp"

namespace etf::tactics {

using kernel::ProofStep;
using syntax::Formula;
using syntax::Sort;
using syntax::Term;

class ProofBuilder {
 public:
  ProofBuilder(theories::Theory theory, std::vector<theories::Statement> premises);

  const Formula& formula(int id) const;
  int last() const { return steps_.empty() ? 0 : steps_.back().id; }
  const std::vector<ProofStep>& steps() const { return steps_; }
  std::vector<ProofStep> take() { return std::move(steps_); }

  // Names that generated variables must avoid.
  void reserve(const Formula& f);
  void reserve(const Term& t);
  void reserve(const std::string& name) { used_.insert(name); }
  std::string fresh(const std::string& base);

  int axiom(const std::string& name);
  int taut(Formula f, std::vector<int> refs = {});
  int mp(int minor, int major);
  int gen(int of, const std::string& var);
  int inst(int of, const Term& w);
  int instf(int of, const std::string& fn);
  int refl(const Term& t);
  int sym(int of);
  int trans(int left, int right);
  int cong(int of, const Term& context);
  int inst_ax(const Formula& all, const Term& w);
  int inst_ax_fn(const Formula& all, const std::string& fn);
  int ex_ax_fn(const Formula& ex, const std::string& fn);
  // From psi -> phi: (ex var. phi) -> psi.
  int exrule(int of, const std::string& var, Sort sort);
  // From psi -> phi: psi -> all var. phi.
  int gen_imp(int of, const std::string& var, Sort sort);
  // s=t -> (phi -> phi2)
  int leibniz(const Term& s, const Term& t, const Formula& phi, const Formula& phi2);
  // Appends a proof, renumbering its steps; returns the id of its last step.
  int append(const std::vector<ProofStep>& proof);

  // Reasoning under a conjunction of hypotheses gamma. A "fact under gamma"
  // is a step proving gamma -> phi.
  int weaken(const Formula& gamma, int fact);
  // gamma -> hyp[ws], hyp being one of gamma's conjuncts.
  int inst_under(const Formula& gamma, const Formula& hyp, const std::vector<Term>& ws);
  // From gamma -> phi and gamma -> s=t: gamma -> phi with every s replaced by t.
  int rewrite_under(const Formula& gamma, int phi, int eq);
  int sym_under(const Formula& gamma, int eq);
  int trans_under(const Formula& gamma, int left, int right);

  struct Existential {
    int step;          // proves ex x. body
    std::string name;  // free variable the body is opened with
  };
  // Opens each existential (later ones may mention earlier names), proves
  // the conclusion from their conjunction with `core`, and discharges them
  // from last to first. The conclusion must not mention the opened names.
  int assemble(const std::vector<Existential>& ex, const std::function<int(const Formula& gamma,
                                                                          const std::vector<Formula>& hyps)>& core);

 private:
  int push(Formula f, kernel::Rule r, kernel::RuleArgs a);

  theories::Theory theory_;
  std::vector<theories::Statement> premises_;
  std::vector<ProofStep> steps_;
  std::set<std::string> used_;
};

// Every occurrence of s replaced by t in a quantifier-free formula.
Formula replace_all(const Formula& f, const Term& s, const Term& t);

}  // namespace etf::tactics
