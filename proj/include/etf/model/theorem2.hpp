#pragma once

// The implications between the minimization principles and the permutation
// principle, each turned into a function transformer: given the hypothesis
// function it builds the conclusion witness the way the implication's proof
// does. The principles themselves are realized by fuel-bounded searches.

#include "etf/model/constructions.hpp"

namespace etf::model {

struct Pipelines {
  Realization re = Realization::Fast;
  std::uint64_t fuel = kDefaultFuel;

  // MIN3 -> MIN2. f binary with a zero in every row; returns g(m)=(mu n)(f(m,n)=0).
  FuncValue p_1to2(const FuncValue& f) const;
  // MIN1 -> PERM. f a unary bijection; returns g with f(g(n))=n.
  FuncValue p_3to4(const FuncValue& f) const;
  // PERM -> MIN1. f binary with exactly one zero per row; returns the witness.
  FuncValue p_4to3(const FuncValue& f) const;
  // MIN1 -> MIN2. f binary with a zero in every row; returns the least zero.
  FuncValue p_3to2(const FuncValue& f) const;
  // MIN2 -> MIN3. f ternary; returns g(m,n)=(mu r)(f(m,n,r)=0).
  FuncValue p_2to1(const FuncValue& f) const;
};

// Intermediate objects of p_4to3, exposed for inspection.
struct PermToMin {
  FuncValue chiA, h;
  PermExtension ext;
  FuncValue g_inverse, witness;
};
PermToMin perm_to_min(const FuncValue& f, Realization re, std::uint64_t fuel = kDefaultFuel);

}  // namespace etf::model
