#include "etf/tactics.hpp"

namespace etf::tactics {

const std::vector<DefinedName>& defined_names() {
  static const std::vector<DefinedName> names = [] {
    std::vector<DefinedName> out;
    for (const auto& [n, s] : theories::defined_signature()) {
      auto p = theories::lookup_premise("def-" + n);
      out.push_back({n, s, "def-" + n, p->formula});
    }
    return out;
  }();
  return names;
}

kernel::ProofScript Derivation::script() const {
  kernel::ProofScript s;
  s.context = kernel::infer_context(goal, steps);
  s.theory = theory;
  s.premises = premises;
  s.goal = goal;
  s.steps = steps;
  return s;
}

kernel::CheckResult Derivation::check() const {
  try {
    return kernel::check_script(script());
  } catch (const syntax::SortError& e) {
    kernel::CheckResult r;
    r.error = kernel::ErrorKind::Malformed;
    r.message = e.what();
    return r;
  }
}

}  // namespace etf::tactics
