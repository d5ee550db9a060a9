#pragma once

// Maximum, pairing, quotient and permutation-extension constructions.
//
// Each construction comes in two realizations. Literal builds every function
// from the combinators, pra/iter and conditional terms over the pra
// arithmetic. Fast evaluates the same recursion equations with host loops
// and host arithmetic; it is what the large test boxes and the
// minimization pipelines use.

#include "etf/model/arith.hpp"
#include "etf/model/func.hpp"

namespace etf::model {

enum class Realization { Literal, Fast };

std::string to_string(Realization r);

// f unary, g ternary with g(m,n,0)=0.
struct MaxSuite {
  FuncValue max2;            // max(m,n)
  FuncValue fmax;            // fmax(m,0)=0; fmax(m,S n) adds f(S n) when g(m,S n,S n)=0
  FuncValue argmax;          // h(m,S n)=S(n) when f(S n)=fmax(m,S n), else h(m,n)
  FuncValue argmax_literal;  // the same, comparing with fmax(m,n)
  FuncValue fmax_oracle;     // max{f(r) : r<=n, g(m,n,r)=0} by enumeration
  FuncValue argmax_oracle;   // max{r<=n : f(r)=fmax_oracle(m,n)} by enumeration
};

// Throws PreconditionFailed when g(m,n,0)!=0 for some m,n <= sample.
MaxSuite max_suite(FuncValue f, FuncValue g, Realization re, std::uint64_t sample = 8);

struct Pairing {
  FuncValue t;       // t(0)=0, t(S n)=t(n)+n+1
  FuncValue g;       // g(m,n,r)=0 iff t(r)<=m
  FuncValue tmax;    // fmax(n,n) for f=t and g
  FuncValue tprime;  // argmax(n,n): max{r : t(r)<=n}
  FuncValue pair;    // t(m+n)+n
  FuncValue p1, p2;
};

Pairing pairing_suite(Realization re);
const Pairing& pairing(Realization re);  // shared instance
Pairing pairing_oracle();                // closed forms

// q(0)=0, q(S n)=q(n)+sgbar(odd(S n)).
FuncValue quotient_fn(Realization re);

struct PermExtension {
  FuncValue step;        // g'(n)=n+1 if odd(n)=1 or n+1 not in A, else n+2
  FuncValue enum_f;      // iter(0, g'): increasing enumeration of the complement of A
  FuncValue inv_fprime;  // f'(n)=s with enum_f(s)=n, for n not in A
  FuncValue g;           // 2*f'(n) off A, h(n) on A
};

// chiA must be 0/1-valued and vanish on even numbers; h must be injective on
// A with odd values. Both are checked on [0,sample] (PreconditionFailed).
// That A is infinite is the caller's obligation.
PermExtension perm_extend(FuncValue chiA, FuncValue h, Realization re, std::uint64_t sample = 99);

// Unary f(0)=base, f(S n)=step(n, f(n)) evaluated with a growing table.
FuncValue table_rec(std::string name, Nat base, std::function<Nat(const Nat& n, const Nat& prev)> step);

}  // namespace etf::model
