#pragma once

// Seeded generators of random terms and formulas over a given signature.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "etf/syntax.hpp"

namespace etf::syntax {

struct Signature {
  std::vector<std::string> numbers;                           // N variables
  std::vector<std::pair<std::string, int>> functions;         // name, arity
};

class SyntaxGen {
 public:
  SyntaxGen(Signature sig, std::uint64_t seed) : sig_(std::move(sig)), rng_(seed) {}

  Term term(int max_depth);
  // Quantifier-free formula.
  Formula open_formula(int max_depth);
  // Formula that may contain quantifiers binding fresh variables of any sort.
  Formula formula(int max_depth);

  std::mt19937_64& rng() { return rng_; }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Term term_in(int depth, const std::vector<std::string>& nums, const std::vector<std::pair<std::string, int>>& fns);
  Formula formula_in(int depth, bool quantifiers, std::vector<std::string>& nums,
                     std::vector<std::pair<std::string, int>>& fns);

  Signature sig_;
  std::mt19937_64 rng_;
  int fresh_ = 0;
};

}  // namespace etf::syntax
