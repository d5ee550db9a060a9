#pragma once

// Recursion schemes: primitive recursion, its weakened form (the step sees
// S(n) instead of n) and unary iteration.

#include "etf/model/func.hpp"

namespace etf::model {

// f(m,0)=g(m), f(m,S(n))=h(m,n,f(m,n))
FuncValue pra(FuncValue g, FuncValue h);
// f(m,0)=g(m), f(m,S(n))=h(m,S(n),f(m,n))
FuncValue wpra(FuncValue g, FuncValue h);
// f(0)=r, f(S(n))=h(f(n))
FuncValue iter(Nat r, FuncValue h);

// Iteration obtained from wpra with h'(a,b,c)=h(c), then fixing the parameter.
FuncValue iter_via_wpra(Nat r, FuncValue h);
// pra realized by wpra with h'(m,n,r)=h(m,pred(n),r).
FuncValue pra_from_wpra(FuncValue g, FuncValue h, FuncValue pred);
// wpra realized by pra with h'(m,n,r)=h(m,S(n),r).
FuncValue wpra_from_pra(FuncValue g, FuncValue h);

}  // namespace etf::model
