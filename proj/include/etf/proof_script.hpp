#pragma once

// JSON proof scripts: a context header, theory, extra premises, goal and steps.

#include <stdexcept>
#include <string>
#include <vector>

#include "etf/kernel.hpp"

namespace etf::kernel {

struct ProofScript {
  syntax::Context context;
  theories::TheoryId theory = theories::TheoryId::ETF;
  std::vector<std::string> premises;
  syntax::Formula goal = syntax::Formula::eq(syntax::Term::zero(), syntax::Term::zero());
  std::vector<ProofStep> steps;
};

// Any problem reading a script: bad JSON, unknown rule, unparsable formula.
class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ProofScript parse_script(const std::string& json_text);
std::string to_json(const ProofScript& script, int indent = 2);

// Resolves premise names and runs check_proof with the script's context.
CheckResult check_script(const ProofScript& script);

// Context declaring every free variable of the goal, the steps and their
// witness terms. Throws SortError if a name is used at two sorts.
syntax::Context infer_context(const syntax::Formula& goal, const std::vector<ProofStep>& steps);

}  // namespace etf::kernel
