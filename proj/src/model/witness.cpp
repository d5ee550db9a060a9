#include "etf/model/witness.hpp"

#include "etf/model/arith.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"
#include "etf/model/search.hpp"

namespace etf::model {

using syntax::Formula;
using syntax::Sort;
using syntax::Term;
using K = Formula::Kind;

namespace {

bool mentions(const Term& t, const std::string& f) {
  if (t.is_app() && t.name() == f) return true;
  if (t.is_var() && t.name() == f) return true;
  for (const auto& a : t.args())
    if (mentions(a, f)) return true;
  return false;
}

const Formula& strip_forall(const Formula& f, std::vector<std::string>& vars) {
  const Formula* cur = &f;
  while (cur->kind() == K::Forall && cur->sort() == Sort::N) {
    vars.push_back(cur->var());
    cur = &cur->body();
  }
  return *cur;
}

bool is_var_named(const Term& t, const std::string& v) { return t.is_var() && t.name() == v; }

// f(x1..xk) with the given variables, in order
bool is_call_on(const Term& t, const std::string& f, const std::vector<std::string>& xs) {
  if (!t.is_app() || t.name() != f || t.args().size() != xs.size()) return false;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!is_var_named(t.arg(i), xs[i])) return false;
  return true;
}

// Function of arity k whose first k arguments play the roles of xs.
FuncValue explicit_fn(const Term& t, const std::vector<std::string>& xs, int k, const Env& env) {
  std::array<std::string, 3> vars{"", "", ""};
  for (std::size_t i = 0; i < xs.size(); ++i) vars[i] = xs[i];
  FuncValue f = internalize_fn(t, vars, env);
  if (k == 3) return f;
  if (k == 2) return fix_r(f, Nat(0));
  return fix_nr(f, Nat(0), Nat(0));
}

FuncValue env_fn(const Env& env, const std::string& name) {
  auto it = env.functions.find(name);
  return it == env.functions.end() ? FuncValue() : it->second;
}

FuncValue recursion_witness(const std::string& f, const std::vector<std::string>& xs, const Formula& b,
                            const Env& env) {
  if (xs.size() != 1 || b.kind() != K::And) return {};
  const std::string& m = xs[0];
  const Formula& base = b.left();
  if (base.kind() != K::Eq) return {};
  const Term& lhs0 = base.lhs();
  if (!lhs0.is_app() || lhs0.name() != f || lhs0.args().size() != 2 || !is_var_named(lhs0.arg(0), m) ||
      !lhs0.arg(1).is_zero() || mentions(base.rhs(), f))
    return {};
  std::vector<std::string> ns;
  const Formula& st = strip_forall(b.right(), ns);
  if (ns.size() != 1 || st.kind() != K::Eq) return {};
  const std::string& n = ns[0];
  const Term& l = st.lhs();
  if (!l.is_app() || l.name() != f || l.args().size() != 2 || !is_var_named(l.arg(0), m) || !l.arg(1).is_succ() ||
      !is_var_named(l.arg(1).arg(0), n))
    return {};
  const Term& r = st.rhs();
  if (!r.is_app() || r.args().size() != 3 || r.name() == f || !is_var_named(r.arg(0), m) ||
      !is_call_on(r.arg(2), f, {m, n}))
    return {};
  FuncValue h = env_fn(env, r.name());
  if (!h) return {};
  FuncValue g = explicit_fn(base.rhs(), {m}, 1, env);
  if (is_var_named(r.arg(1), n)) return pra(g, h);
  if (r.arg(1).is_succ() && is_var_named(r.arg(1).arg(0), n)) return wpra(g, h);
  return {};
}

FuncValue inverse_witness(const std::string& f, const std::vector<std::string>& xs, const Formula& b,
                          const Env& env) {
  if (xs.size() != 1 || b.kind() != K::Eq || !is_var_named(b.rhs(), xs[0])) return {};
  const Term& l = b.lhs();
  if (!l.is_app() || l.args().size() != 1 || l.name() == f || !is_call_on(l.arg(0), f, xs)) return {};
  FuncValue F = env_fn(env, l.name());
  return F && F.arity() == 1 ? inverse_fn(F) : FuncValue();
}

FuncValue mu_witness(const std::string& f, const std::vector<std::string>& xs, const Formula& b, const Env& env) {
  const Formula& e = b.kind() == K::And ? b.left() : b;
  if (e.kind() != K::Eq || !e.rhs().is_zero()) return {};
  const Term& l = e.lhs();
  if (!l.is_app() || l.name() == f || l.args().size() != xs.size() + 1) return {};
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!is_var_named(l.arg(i), xs[i])) return {};
  if (!is_call_on(l.args().back(), f, xs)) return {};
  FuncValue F = env_fn(env, l.name());
  return F && F.arity() == static_cast<int>(xs.size()) + 1 ? mu_fn(F) : FuncValue();
}

}  // namespace

FuncValue standard_witness(const std::string& var, Sort sort, const Formula& body, const Env& env) {
  const int k = syntax::arity(sort);
  std::vector<std::string> xs;
  const Formula& b = strip_forall(body, xs);
  if (b.kind() == K::Eq && static_cast<int>(xs.size()) == k && is_call_on(b.lhs(), var, xs) &&
      !mentions(b.rhs(), var))
    return explicit_fn(b.rhs(), xs, k, env);
  if (k == 2)
    if (auto w = recursion_witness(var, xs, b, env)) return w;
  if (k == 1)
    if (auto w = inverse_witness(var, xs, b, env)) return w;
  if (static_cast<int>(xs.size()) == k)
    if (auto w = mu_witness(var, xs, b, env)) return w;
  return {};
}

FunctionWitnesses standard_witnesses() {
  FunctionWitnesses w;
  w.exists = standard_witness;
  const Arith& a = arith_oracle();
  auto swap = native(1, "swap", [](const Nat* x) { return x[0].is_odd() ? monus(x[0], Nat(1)) : x[0].succ(); }, {}, 1);
  w.pool[1] = {fix_nr(proj(0), Nat(0), Nat(0)), const_fn(Nat(0)), succ_fn(), swap, a.sg};
  auto one_zero = native(2, "row_zero", [](const Nat* x) { return x[1] == Nat(x[0].to_u64() % 3) ? Nat(0) : Nat(1); },
                         {}, 0b11);
  auto late_zero = native(2, "late_zero", [](const Nat* x) { return x[1] < x[0] ? Nat(1) : Nat(0); }, {}, 0b11);
  w.pool[2] = {a.plus, a.monus, one_zero, late_zero, fix_r(lift1(const_fn(Nat(1))), Nat(0))};
  auto diag_zero = native(3, "diag_zero", [](const Nat* x) { return x[2] == x[0] ? Nat(0) : Nat(1); }, {}, 0b101);
  w.pool[3] = {proj(0), proj(2), diag_zero, a.f2};
  return w;
}

}  // namespace etf::model
