#include <set>

#include "etf/model/eval.hpp"
#include "etf/tactics.hpp"
#include "internalizer.hpp"

namespace etf::tactics {

namespace detail {

Internalizer::Internalizer(ProofBuilder& b, std::array<std::string, 3> vars) : b_(b), vars_(std::move(vars)) {
  for (const auto& v : vars_) b_.reserve(v);
  bound_ = b_.fresh("f");
}

std::vector<Term> Internalizer::vterms() const {
  return {Term::var(vars_[0]), Term::var(vars_[1]), Term::var(vars_[2])};
}

Formula Internalizer::goal(const Term& t) const {
  Formula body = Formula::eq(Term::app(bound_, vterms()), t);
  for (std::size_t i = 3; i-- > 0;) body = Formula::forall(vars_[i], Sort::N, body);
  return Formula::exists(bound_, Sort::F3, body);
}

int Internalizer::close(const Formula& gamma, int eq, const std::string& F, const Term& t) {
  int c = eq;
  for (std::size_t i = 3; i-- > 0;) c = b_.gen_imp(c, vars_[i], Sort::N);
  int intro = b_.ex_ax_fn(goal(t), F);
  return b_.taut(Formula::implies(gamma, goal(t)), {c, intro});
}

int Internalizer::prove(const Term& t) {
  const std::string key = syntax::print(t);
  if (auto it = done_.find(key); it != done_.end()) return it->second;
  int id = 0;
  if (t.is_var() && t.name() == vars_[0]) {
    id = b_.axiom("init-ii");
  } else if (t.is_var() && t.name() == vars_[1]) {
    id = b_.axiom("init-iii");
  } else if (t.is_var() && t.name() == vars_[2]) {
    id = b_.axiom("init-iv");
  } else if (t.is_zero() || t.is_var()) {
    id = constant(t);
  } else {
    id = composite(t);
  }
  done_[key] = id;
  return id;
}

// f(m)=c by the constant-function axiom, then lifted to three arguments.
int Internalizer::constant(const Term& t) {
  int e1 = b_.inst(b_.axiom("init-i"), t);
  const std::string g = b_.fresh("g");
  int e2 = b_.instf(b_.axiom("comp-ii"), g);
  const std::string F = b_.fresh("f");
  const auto V = vterms();
  return b_.assemble({{e1, g}, {e2, F}}, [&](const Formula& gamma, const std::vector<Formula>& hyps) {
    int c = b_.inst_under(gamma, hyps[1], V);
    int e = b_.inst_under(gamma, hyps[0], {V[0]});
    c = b_.rewrite_under(gamma, c, e);
    return close(gamma, c, F, t);
  });
}

// g(a1,..,ak) and S(a): internalize the arguments, lift g (or the successor
// function) to three places if needed, and compose.
int Internalizer::composite(const Term& t) {
  const bool succ = t.is_succ();
  const std::vector<Term>& args = t.args();
  const std::size_t k = succ ? 1 : args.size();
  if (k < 1 || k > 3) throw std::invalid_argument("cannot internalize application of arity " + std::to_string(k));

  std::vector<ProofBuilder::Existential> ex;
  std::vector<std::string> h;
  for (const auto& a : args) {
    int e = prove(a);
    h.push_back(b_.fresh("h"));
    ex.push_back({e, h.back()});
  }
  const std::size_t n_args = ex.size();

  std::string u = succ ? "" : t.name();
  int s_index = -1;
  if (succ) {
    u = b_.fresh("s");
    s_index = static_cast<int>(ex.size());
    ex.push_back({b_.axiom("init-v"), u});
  }
  std::string G = u;
  int lift_index = -1;
  if (k < 3) {
    int lift = b_.instf(b_.axiom(k == 2 ? "comp-i" : "comp-ii"), u);
    G = b_.fresh("f");
    lift_index = static_cast<int>(ex.size());
    ex.push_back({lift, G});
  }
  const std::array<std::string, 3> hs = k == 1   ? std::array<std::string, 3>{h[0], h[0], h[0]}
                                        : k == 2 ? std::array<std::string, 3>{h[0], h[1], h[1]}
                                                 : std::array<std::string, 3>{h[0], h[1], h[2]};
  int cv = b_.instf(b_.axiom("comp-v"), G);
  for (const auto& name : hs) cv = b_.instf(cv, name);
  const std::string F = b_.fresh("f");
  ex.push_back({cv, F});

  const auto V = vterms();
  return b_.assemble(ex, [&](const Formula& gamma, const std::vector<Formula>& hyps) {
    int c = b_.inst_under(gamma, hyps.back(), V);
    std::vector<Term> x;
    for (const auto& name : hs) x.push_back(Term::app(name, V));
    if (lift_index >= 0) c = b_.rewrite_under(gamma, c, b_.inst_under(gamma, hyps[lift_index], x));
    if (s_index >= 0) c = b_.rewrite_under(gamma, c, b_.inst_under(gamma, hyps[s_index], {x[0]}));
    for (std::size_t i = 0; i < n_args; ++i) c = b_.rewrite_under(gamma, c, b_.inst_under(gamma, hyps[i], V));
    return close(gamma, c, F, t);
  });
}

Formula Internalizer::goal(const Term& t, int arity) const {
  if (arity == 3) return goal(t);
  std::vector<Term> v = vterms();
  v.resize(static_cast<std::size_t>(arity));
  Formula body = Formula::eq(Term::app(bound_, v), t);
  for (int i = arity; i-- > 0;) body = Formula::forall(vars_[static_cast<std::size_t>(i)], Sort::N, body);
  return Formula::exists(bound_, arity == 1 ? Sort::F1 : Sort::F2, body);
}

// Fixes the unused trailing arguments of the ternary function at 0, through
// comp-iv (unary) or comp-iii (binary).
int Internalizer::narrow(const Term& t, int arity) {
  int e3 = prove(t);
  const std::string a = b_.fresh("f");
  int cv = b_.instf(b_.axiom(arity == 1 ? "comp-iv" : "comp-iii"), a);
  for (int i = arity; i < 3; ++i) cv = b_.inst(cv, Term::zero());
  const std::string F = b_.fresh("f");
  std::vector<Term> x = vterms(), full = vterms();
  x.resize(static_cast<std::size_t>(arity));
  for (int i = arity; i < 3; ++i) full[static_cast<std::size_t>(i)] = Term::zero();
  const Formula target = goal(t, arity);
  return b_.assemble({{e3, a}, {cv, F}}, [&](const Formula& gamma, const std::vector<Formula>& hyps) {
    int c = b_.inst_under(gamma, hyps[1], x);
    int e = b_.inst_under(gamma, hyps[0], full);
    c = b_.rewrite_under(gamma, c, e);
    for (int i = arity; i-- > 0;) c = b_.gen_imp(c, vars_[static_cast<std::size_t>(i)], Sort::N);
    int intro = b_.ex_ax_fn(target, F);
    return b_.taut(Formula::implies(gamma, target), {c, intro});
  });
}

int Internalizer::prove_unary(const Term& t) { return narrow(t, 1); }
int Internalizer::prove_binary(const Term& t) { return narrow(t, 2); }

}  // namespace detail

namespace {

void check_scope(const Term& t, const std::array<std::string, 3>& vars, const syntax::Context& ctx) {
  if (vars[0] == vars[1] || vars[0] == vars[2] || vars[1] == vars[2])
    throw VarClash("internalization variables must be distinct");
  for (const auto& [n, s] : syntax::free_vars(t)) {
    if (s == Sort::N && (n == vars[0] || n == vars[1] || n == vars[2])) continue;
    auto d = ctx.lookup(n);
    if (!d) throw syntax::UnboundVariable(n);
    if (*d != s) throw syntax::SortError("'" + n + "' is declared " + syntax::to_string(*d));
  }
}

}  // namespace

Derivation internalize_proof(const Term& t, const std::array<std::string, 3>& vars, const syntax::Context& ctx,
                             int arity) {
  if (arity < 1 || arity > 3) throw std::invalid_argument("internalization arity must be 1, 2 or 3");
  check_scope(t, vars, ctx);
  for (int i = arity; i < 3; ++i)
    for (const auto& [n, s] : syntax::free_vars(t))
      if (n == vars[static_cast<std::size_t>(i)])
        throw std::invalid_argument("'" + n + "' is not an argument of the " + std::to_string(arity) + "-ary function");
  ProofBuilder b(theories::axioms_of(theories::TheoryId::COM_fcn), {});
  b.reserve(t);
  for (const auto& [n, s] : ctx.declarations()) b.reserve(n);
  detail::Internalizer in(b, vars);
  if (arity == 3)
    in.prove(t);
  else
    in.narrow(t, arity);
  Derivation d;
  d.theory = theories::TheoryId::COM_fcn;
  d.goal = in.goal(t, arity);
  d.steps = b.take();
  return d;
}

Internalized internalize(const Term& t, const std::array<std::string, 3>& vars, const syntax::Context& ctx,
                         const model::Env& env) {
  Internalized out;
  out.proof = internalize_proof(t, vars, ctx);
  out.witness = model::internalize_fn(t, vars, env);
  return out;
}

}  // namespace etf::tactics
