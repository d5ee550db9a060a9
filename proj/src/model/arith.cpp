#include "etf/model/arith.hpp"

#include "etf/compile.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"

namespace etf::model {

using syntax::Term;

std::string to_string(Basis b) {
  switch (b) {
    case Basis::Wpra: return "wpra";
    case Basis::Pra: return "pra";
    case Basis::Native: return "native";
  }
  return "?";
}

namespace {

syntax::Context term_context(const Env& env) {
  syntax::Context ctx{{"m", syntax::Sort::N}, {"n", syntax::Sort::N}, {"r", syntax::Sort::N}};
  for (const auto& [name, v] : env.numbers)
    if (!ctx.contains(name)) ctx.declare(name, syntax::Sort::N);
  for (const auto& [name, f] : env.functions) ctx.declare(name, syntax::function_sort(f.arity()));
  return ctx;
}

Term conditional(std::string_view phi, std::string_view s, std::string_view t, const Env& env) {
  auto ctx = term_context(env);
  Term c = tactics::compile_term(syntax::parse_formula(phi, ctx));
  return Term::app("f2", {syntax::parse_term(s, ctx), c, syntax::parse_term(t, ctx)});
}

std::optional<Affine> sum_sym(const Affine* a) { return Affine{a[0].a + a[1].a, a[0].b + a[1].b}; }

std::optional<Affine> product_sym(const Affine* a) {
  if (a[0].concrete()) return Affine{a[0].a * a[1].a, a[0].a * a[1].b};
  if (a[1].concrete()) return Affine{a[1].a * a[0].a, a[1].a * a[0].b};
  return std::nullopt;
}

Nat fprime_native(const Nat& n) {
  Nat v(0);
  for (Nat i(0); i < n; i = i.succ()) v = (v.is_zero() ? Nat(1) : Nat(0)) + v * v.succ();
  return v;
}

Arith native_arith() {
  Arith a;
  a.basis = Basis::Native;
  a.plus = native(2, "plus", [](const Nat* x) { return x[0] + x[1]; }, sum_sym, 0b11);
  a.times = native(2, "times", [](const Nat* x) { return x[0] * x[1]; }, product_sym, 0b11);
  a.sg = native(1, "sg", [](const Nat* x) { return x[0].is_zero() ? Nat(0) : Nat(1); }, {}, 0b1);
  a.sgbar = native(1, "sgbar", [](const Nat* x) { return x[0].is_zero() ? Nat(1) : Nat(0); }, {}, 0b1);
  a.odd = native(1, "odd", [](const Nat* x) { return x[0].is_odd() ? Nat(1) : Nat(0); }, {}, 0b1);
  a.fprime = native(1, "fprime", [](const Nat* x) { return fprime_native(x[0]); }, {}, 0b1);
  a.pred = native(1, "pred", [](const Nat* x) { return monus(x[0], Nat(1)); }, {}, 0b1);
  a.monus = native(2, "monus", [](const Nat* x) { return monus(x[0], x[1]); }, {}, 0b11);
  a.lt = native(2, "lt", [](const Nat* x) { return x[0] < x[1] ? Nat(1) : Nat(0); }, {}, 0b11);
  a.f2 = native(3, "f2", [](const Nat* x) { return x[1].is_zero() ? x[0] : x[2]; }, {}, 0b111);
  return a;
}

}  // namespace

FuncValue term_fn(std::string_view text, const Env& env) {
  Term t = syntax::parse_term(text, term_context(env));
  return internalize_fn(t, {"m", "n", "r"}, env);
}

std::string conditional_term(std::string_view phi, std::string_view s, std::string_view t, const Env& env) {
  return syntax::print(conditional(phi, s, t, env));
}

FuncValue conditional_fn(std::string_view phi, std::string_view s, std::string_view t, const Env& env) {
  return internalize_fn(conditional(phi, s, t, env), {"m", "n", "r"}, env);
}

FuncValue at_zero_param(FuncValue F) {
  return fix_nr(compose(lift2(std::move(F)), proj(1), proj(0), proj(0)), Nat(0), Nat(0));
}

FuncValue unary_rec(Basis b, Nat base, std::string_view step, const Env& env) {
  FuncValue h = term_fn(step, env);
  FuncValue g = const_fn(std::move(base));
  return at_zero_param(b == Basis::Wpra ? wpra(std::move(g), std::move(h)) : pra(std::move(g), std::move(h)));
}

FuncValue binary_rec(Basis b, std::string_view base, std::string_view step, const Env& env) {
  FuncValue g = fix_nr(term_fn(base, env), Nat(0), Nat(0));
  FuncValue h = term_fn(step, env);
  return b == Basis::Wpra ? wpra(std::move(g), std::move(h)) : pra(std::move(g), std::move(h));
}

Env arith_env(const Arith& a) {
  Env e;
  e.set("plus", a.plus).set("times", a.times).set("sg", a.sg).set("sgbar", a.sgbar);
  e.set("odd", a.odd).set("fprime", a.fprime).set("pred", a.pred).set("monus", a.monus);
  if (a.lt) e.set("lt", a.lt);
  if (a.f2) e.set("f2", a.f2);
  return e;
}

Arith make_arith(Basis b) {
  if (b == Basis::Native) return native_arith();
  Arith a;
  a.basis = b;
  Env e;
  a.plus = binary_rec(b, "m", "S(r)", e);
  e.set("plus", a.plus);
  a.times = binary_rec(b, "0", "plus(r,m)", e);
  e.set("times", a.times);
  a.sg = unary_rec(b, Nat(0), "S(0)", e);
  a.sgbar = unary_rec(b, Nat(1), "0", e);
  e.set("sg", a.sg).set("sgbar", a.sgbar);
  a.odd = unary_rec(b, Nat(0), "sgbar(r)", e);
  e.set("odd", a.odd);
  a.fprime = unary_rec(b, Nat(0), "plus(sgbar(r),times(r,S(r)))", e);
  e.set("fprime", a.fprime);
  // under wpra the step already receives S(n)
  a.pred = b == Basis::Wpra ? unary_rec(b, Nat(0), "times(sgbar(odd(fprime(n))),S(r))", e) : unary_rec(b, Nat(0), "n", e);
  e.set("pred", a.pred);
  a.monus = binary_rec(b, "m", "pred(r)", e);
  e.set("monus", a.monus);
  a.f2 = term_fn("plus(times(m,sgbar(n)),times(r,sg(n)))", e);
  e.set("f2", a.f2);
  FuncValue h = conditional_fn("r=S(0) | m=n", "S(0)", "0", e);
  FuncValue g = const_fn(Nat(0));
  a.lt = b == Basis::Wpra ? pra_from_wpra(g, h, a.pred) : pra(g, h);
  return a;
}

const Arith& arith(Basis b) {
  static const Arith wp = make_arith(Basis::Wpra);
  static const Arith pr = make_arith(Basis::Pra);
  static const Arith nat = make_arith(Basis::Native);
  switch (b) {
    case Basis::Wpra: return wp;
    case Basis::Pra: return pr;
    case Basis::Native: return nat;
  }
  return nat;
}

}  // namespace etf::model
