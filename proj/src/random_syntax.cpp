#include "etf/random_syntax.hpp"

namespace etf::syntax {

Term SyntaxGen::term(int max_depth) { return term_in(max_depth, sig_.numbers, sig_.functions); }

Term SyntaxGen::term_in(int depth, const std::vector<std::string>& nums,
                        const std::vector<std::pair<std::string, int>>& fns) {
  const int leaves = 1 + (nums.empty() ? 0 : 2);
  if (depth <= 1) {
    int c = pick(leaves);
    if (c == 0) return Term::zero();
    return Term::var(nums[pick(static_cast<int>(nums.size()))]);
  }
  int c = pick(leaves + 1 + (fns.empty() ? 0 : 3));
  if (c < leaves) {
    if (c == 0) return Term::zero();
    return Term::var(nums[pick(static_cast<int>(nums.size()))]);
  }
  if (c == leaves) return Term::succ(term_in(depth - 1, nums, fns));
  const auto& [name, ar] = fns[pick(static_cast<int>(fns.size()))];
  std::vector<Term> args;
  for (int i = 0; i < ar; ++i) args.push_back(term_in(depth - 1, nums, fns));
  return Term::app(name, std::move(args));
}

Formula SyntaxGen::open_formula(int max_depth) {
  auto nums = sig_.numbers;
  auto fns = sig_.functions;
  return formula_in(max_depth, false, nums, fns);
}

Formula SyntaxGen::formula(int max_depth) {
  auto nums = sig_.numbers;
  auto fns = sig_.functions;
  return formula_in(max_depth, true, nums, fns);
}

Formula SyntaxGen::formula_in(int depth, bool quantifiers, std::vector<std::string>& nums,
                              std::vector<std::pair<std::string, int>>& fns) {
  auto atom = [&] { return Formula::eq(term_in(3, nums, fns), term_in(3, nums, fns)); };
  if (depth <= 1) return atom();
  const int choices = quantifiers ? 9 : 6;
  switch (pick(choices)) {
    case 0: return atom();
    case 1: return Formula::neg(formula_in(depth - 1, quantifiers, nums, fns));
    case 2: return Formula::conj(formula_in(depth - 1, quantifiers, nums, fns), formula_in(depth - 1, quantifiers, nums, fns));
    case 3: return Formula::disj(formula_in(depth - 1, quantifiers, nums, fns), formula_in(depth - 1, quantifiers, nums, fns));
    case 4:
      return Formula::implies(formula_in(depth - 1, quantifiers, nums, fns), formula_in(depth - 1, quantifiers, nums, fns));
    case 5: return Formula::iff(formula_in(depth - 1, quantifiers, nums, fns), formula_in(depth - 1, quantifiers, nums, fns));
    default: {
      // reuse an existing name sometimes so shadowing gets exercised
      const bool function_binder = pick(3) == 0;
      const auto kind = std::array{Formula::Kind::Forall, Formula::Kind::Exists, Formula::Kind::ExistsUnique}[pick(3)];
      if (function_binder) {
        const int ar = 1 + pick(3);
        std::string name = "q" + std::to_string(++fresh_);
        fns.emplace_back(name, ar);
        Formula body = formula_in(depth - 1, quantifiers, nums, fns);
        fns.pop_back();
        return Formula::quantifier(kind, name, function_sort(ar), body);
      }
      std::string name = (!nums.empty() && pick(2) == 0) ? nums[pick(static_cast<int>(nums.size()))]
                                                          : "v" + std::to_string(++fresh_);
      nums.push_back(name);
      Formula body = formula_in(depth - 1, quantifiers, nums, fns);
      nums.pop_back();
      return Formula::quantifier(kind, name, Sort::N, body);
    }
  }
}

}  // namespace etf::syntax
