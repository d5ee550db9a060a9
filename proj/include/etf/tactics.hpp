#pragma once

// Proof- and term-producing procedures: internalization of terms as function
// variables, induction for equations and open formulas, and definitions by
// cases. Everything emitted here is an ordinary proof that the kernel checks
// again; the tactics are not trusted.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "etf/compile.hpp"
#include "etf/kernel.hpp"
#include "etf/model/eval.hpp"
#include "etf/proof_script.hpp"

namespace etf::tactics {

// A supplied proof does not prove what the tactic needs.
class PremiseMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarClash : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Derivation {
  theories::TheoryId theory = theories::TheoryId::COM_fcn;
  std::vector<std::string> premises;
  syntax::Formula goal = syntax::Formula::eq(syntax::Term::zero(), syntax::Term::zero());
  std::vector<kernel::ProofStep> steps;

  kernel::ProofScript script() const;  // context inferred from the steps
  kernel::CheckResult check() const;
};

// --- internalization

// Proof of  ex f:F3. all v0 v1 v2. f(v0,v1,v2)=t  in COM_fcn, by recursion on
// t. Other free variables of t stay free. Throws UnboundVariable when a free
// variable of t is missing from ctx and VarClash when vars repeat.
// With arity 2 or 1 the statement is about f(v0,v1) or f(v0), and t may not
// mention the dropped variables.
Derivation internalize_proof(const syntax::Term& t, const std::array<std::string, 3>& vars,
                             const syntax::Context& ctx, int arity = 3);

struct Internalized {
  model::FuncValue witness;  // (v0,v1,v2) -> value of t
  Derivation proof;
};
Internalized internalize(const syntax::Term& t, const std::array<std::string, 3>& vars, const syntax::Context& ctx,
                         const model::Env& env);

// --- induction

using Proof = std::vector<kernel::ProofStep>;

// From a proof of s[0/x]=t[0/x] and one of all x. (s=t -> s[S x/x]=t[S x/x]),
// a proof of all x. s=t in COMI_fcn. Both inputs are checked first against
// COMI_fcn with the named premises; PremiseMismatch if either fails or proves
// something else.
Derivation equational_induction(const syntax::Term& s, const syntax::Term& t, const std::string& x, const Proof& base,
                                const Proof& step, const std::vector<std::string>& premises = {});

// The same for an open formula, going through phi <-> compile(phi)=0 (proved
// from the eqz-* lemmas). NotOpen for quantified phi.
Derivation open_induction(const syntax::Formula& phi, const std::string& x, const Proof& base, const Proof& step,
                          const std::vector<std::string>& premises = {});

// Proof of  phi <-> compile_term(phi)=0  from the eqz-* lemmas.
Derivation compilation_equivalence(const syntax::Formula& phi);

// --- definition by cases

struct ConditionalDef {
  model::FuncValue witness;    // (n,m,r) -> s if phi holds, t otherwise
  syntax::Term defining_term;  // f2(s, compile(phi), t)
};
// phi, s and t are read over the variables n, m, r. Reserved names missing
// from env are taken from the pra arithmetic.
ConditionalDef conditional_def(const syntax::Formula& phi, const syntax::Term& s, const syntax::Term& t,
                               const model::Env& env = {});

// --- the reserved signature

struct DefinedName {
  std::string name;
  syntax::Sort sort;
  std::string premise;            // "def-<name>"
  syntax::Formula definition;     // its defining equations
};
const std::vector<DefinedName>& defined_names();

}  // namespace etf::tactics
