#pragma once

// Function witnesses for existential function quantifiers, read off the shape
// of the quantified body, and sample pools for universal ones.
//
//   all xs. f(xs)=t                     f := internalized t
//   all m. f(m,0)=G & all n. f(m,S(n))=h(m,n,f(m,n))      f := pra
//   all m. f(m,0)=G & all n. f(m,S(n))=h(m,S(n),f(m,n))   f := wpra
//   all n. F(f(n))=n                    f := inverse of F
//   all m.. F(m..,f(m..))=0 & ...       f := least zero of F

#include "etf/model/eval.hpp"

namespace etf::model {

// Empty FuncValue when the body has none of the shapes above.
FuncValue standard_witness(const std::string& var, syntax::Sort sort, const syntax::Formula& body, const Env& env);

// Witness rule above plus a fixed pool of sample functions per arity.
FunctionWitnesses standard_witnesses();

}  // namespace etf::model
