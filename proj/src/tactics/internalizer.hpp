#pragma once

// Shared by the internalization and induction tactics.

#include <array>
#include <map>
#include <string>

#include "etf/proof_builder.hpp"

namespace etf::tactics::detail {

class Internalizer {
 public:
  Internalizer(ProofBuilder& b, std::array<std::string, 3> vars);

  // Step proving  ex f:F3. all v0 v1 v2. f(v0,v1,v2)=t.
  int prove(const Term& t);
  // Step proving  ex f:F1. all v0. f(v0)=t; t must not mention v1, v2.
  int prove_unary(const Term& t);
  // Step proving  ex f:F2. all v0 v1. f(v0,v1)=t; t must not mention v2.
  int prove_binary(const Term& t);
  // prove_unary or prove_binary by arity.
  int narrow(const Term& t, int arity);

  Formula goal(const Term& t) const;
  // The same statement for arity 1 or 2.
  Formula goal(const Term& t, int arity) const;

 private:
  int constant(const Term& t);
  int composite(const Term& t);
  // From gamma -> F(v)=t: gamma -> ex f. all v. f(v)=t.
  int close(const Formula& gamma, int eq, const std::string& F, const Term& t);
  std::vector<Term> vterms() const;

  ProofBuilder& b_;
  std::array<std::string, 3> vars_;
  std::string bound_;
  std::map<std::string, int> done_;
};

}  // namespace etf::tactics::detail
