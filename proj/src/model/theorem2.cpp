#include "etf/model/theorem2.hpp"

#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"
#include "etf/model/search.hpp"

namespace etf::model {

namespace {

Env base_env(Realization re) {
  Env e = arith_env(re == Realization::Fast ? arith_oracle() : arith(Basis::Pra));
  const Pairing& p = pairing(re);
  e.set("pair", p.pair).set("p1", p.p1).set("p2", p.p2);
  e.set("q", quotient_fn(re));
  return e;
}

FuncValue unary_term(std::string_view text, const Env& env) { return fix_nr(term_fn(text, env), Nat(0), Nat(0)); }
FuncValue binary_term(std::string_view text, const Env& env) { return fix_r(term_fn(text, env), Nat(0)); }

void expect_arity(const FuncValue& f, int k, const char* who) {
  if (!f || f.arity() != k) throw std::invalid_argument(std::string(who) + ": function of arity " + std::to_string(k) + " expected");
}

}  // namespace

FuncValue Pipelines::p_1to2(const FuncValue& f) const {
  expect_arity(f, 2, "p_1to2");
  // f'(r,m,n)=f(m,n); g(r,m) by MIN3; g'(m)=g(0,m)
  FuncValue lifted = compose(lift2(f), proj(1), proj(2), proj(2));
  FuncValue g = mu_fn(lifted, fuel);
  return at_zero_param(g);
}

FuncValue Pipelines::p_3to4(const FuncValue& f) const {
  expect_arity(f, 1, "p_3to4");
  Env env = base_env(re);
  env.set("f", f);
  // h(n,m)=0 iff f(m)=n
  FuncValue h = fix_r(conditional_fn("f(n)=m", "0", "S(0)", env), Nat(0));
  return mu_fn(h, fuel);
}

PermToMin perm_to_min(const FuncValue& f, Realization re, std::uint64_t fuel) {
  expect_arity(f, 2, "p_4to3");
  PermToMin out;
  Env env = base_env(re);
  env.set("f", f);
  // r in A iff r is odd and f(p1(k),p2(k))=0 for k=q(r-1)
  out.chiA = memoized(unary_term(
      conditional_term("odd(m)=S(0) & f(p1(q(pred(m))),p2(q(pred(m))))=0", "S(0)", "0", env), env));
  env.set("chi", out.chiA);
  out.h = memoized(unary_term(conditional_term("chi(m)=S(0)", "S(times(S(S(0)),p1(q(pred(m)))))", "0", env), env));
  out.ext = perm_extend(out.chiA, out.h, re);
  out.g_inverse = inverse_fn(out.ext.g, fuel);
  env.set("ginv", out.g_inverse);
  out.witness = unary_term("p2(q(pred(ginv(S(times(S(S(0)),m))))))", env);
  return out;
}

FuncValue Pipelines::p_4to3(const FuncValue& f) const { return perm_to_min(f, re, fuel).witness; }

FuncValue Pipelines::p_3to2(const FuncValue& f) const {
  expect_arity(f, 2, "p_3to2");
  Env env = base_env(re);
  env.set("f", f);
  // nz(m,n)=1 iff f(m,r)!=0 for all r<n
  FuncValue nz = binary_rec(Basis::Pra, "S(0)", "times(r,sg(f(m,n)))", env);
  env.set("nz", nz);
  FuncValue h = fix_r(conditional_fn("f(m,n)=0 & nz(m,n)=S(0)", "0", "S(0)", env), Nat(0));
  return mu_fn(h, fuel);
}

FuncValue Pipelines::p_2to1(const FuncValue& f) const {
  expect_arity(f, 3, "p_2to1");
  Env env = base_env(re);
  env.set("f", f);
  FuncValue fk = binary_term("f(p1(m),p2(m),n)", env);
  env.set("gk", mu_fn(fk, fuel));
  return binary_term("gk(pair(m,n))", env);
}

}  // namespace etf::model
