#pragma once

// The arithmetic functions defined by recursion, the order function and
// conditional definitions, in three interchangeable realizations:
//
//   Wpra   combinators, wpra and iter only; pred goes through odd and f'.
//   Pra    combinators and pra; pred(S(n))=n directly. Used where pred or
//          monus see arguments too large for f'.
//   Native host arithmetic. Serves as the oracle and as the arithmetic layer
//          of the heavy constructions.

#include <string>
#include <string_view>

#include "etf/model/eval.hpp"
#include "etf/model/func.hpp"

namespace etf::model {

enum class Basis { Wpra, Pra, Native };

std::string to_string(Basis b);

struct Arith {
  Basis basis;
  FuncValue plus, times, sg, sgbar, odd, fprime, pred, monus;
  FuncValue lt;  // lt(m,n)=1 iff m<n, else 0
  FuncValue f2;  // f2(n,m,r)=n*sgbar(m)+r*sg(m)
};

// Shared instances, built on first use.
const Arith& arith(Basis b);
inline const Arith& arith_oracle() { return arith(Basis::Native); }

// Arith built afresh (own memo tables).
Arith make_arith(Basis b);

// Env binding plus, times, sg, sgbar, odd, fprime, pred, monus, lt and f2.
Env arith_env(const Arith& a);

// Ternary function (m,n,r) -> value of `text`, a term over m, n, r and the
// functions bound in env.
FuncValue term_fn(std::string_view text, const Env& env);

// (m,n,r) -> s if phi else t, through the compiled term of phi and f2.
FuncValue conditional_fn(std::string_view phi, std::string_view s, std::string_view t, const Env& env);
// Term text of the same definition.
std::string conditional_term(std::string_view phi, std::string_view s, std::string_view t, const Env& env);

// Unary and binary recursive definitions with a step given as a term over
// m (parameter), n (counter as the scheme passes it) and r (previous value).
FuncValue unary_rec(Basis b, Nat base, std::string_view step, const Env& env);
FuncValue binary_rec(Basis b, std::string_view base, std::string_view step, const Env& env);

// Unary f(n) = F(0,n) for a binary F.
FuncValue at_zero_param(FuncValue F);

}  // namespace etf::model
