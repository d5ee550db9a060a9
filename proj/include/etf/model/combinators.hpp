#pragma once

// Realizers of the initial-function and composition axioms, plus native
// functions for oracles.

#include <functional>
#include <string>

#include "etf/model/func.hpp"

namespace etf::model {

FuncValue const_fn(Nat c);      // f(m)=c
FuncValue proj(int i);          // ternary projection onto argument i (0,1,2)
FuncValue succ_fn();            // f(n)=S(n)
FuncValue lift2(FuncValue g);   // f(m,n,r)=g(m,n)
FuncValue lift1(FuncValue g);   // f(m,n,r)=g(m)
FuncValue fix_r(FuncValue g, Nat r);          // f(m,n)=g(m,n,r)
FuncValue fix_nr(FuncValue g, Nat n, Nat r);  // f(m)=g(m,n,r)
// f(m,n,r)=g(h1(m,n,r),h2(m,n,r),h3(m,n,r)), all ternary
FuncValue compose(FuncValue g, FuncValue h1, FuncValue h2, FuncValue h3);

// Same function with an argument -> value cache in front.
FuncValue memoized(FuncValue f);

// f(n,n) for binary f.
FuncValue diagonal(FuncValue f);

using NativeEval = std::function<Nat(const Nat*)>;
using NativeSym = std::function<std::optional<Affine>(const Affine*)>;

// `deps` bit i set when the function may depend on argument i.
FuncValue native(int arity, std::string name, NativeEval f, NativeSym sym = {}, unsigned deps = 0b111);

}  // namespace etf::model
