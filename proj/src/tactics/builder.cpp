#include "etf/proof_builder.hpp"

#include <map>
#include <stdexcept>

namespace etf::tactics {

using kernel::Rule;
using kernel::RuleArgs;
using K = Formula::Kind;

namespace {

Formula open_body(const Formula& q, const std::string& name) {
  if (q.sort() == Sort::N) return syntax::substitute(q.body(), q.var(), Term::var(name));
  return syntax::rename_function(q.body(), q.var(), name);
}

Formula instance(const Formula& q, const Term& w) {
  if (q.kind() != K::Forall && q.kind() != K::Exists) throw std::logic_error("not a quantifier: " + syntax::print(q));
  return syntax::substitute(q.body(), q.var(), w);
}

Formula instance_fn(const Formula& q, const std::string& fn) {
  if (!q.is_quantifier() || q.sort() == Sort::N) throw std::logic_error("not a function quantifier: " + syntax::print(q));
  return syntax::rename_function(q.body(), q.var(), fn);
}

}  // namespace

Formula replace_all(const Formula& f, const Term& s, const Term& t) {
  switch (f.kind()) {
    case K::Eq: return Formula::eq(syntax::replace_subterm(f.lhs(), s, t), syntax::replace_subterm(f.rhs(), s, t));
    case K::Not: return Formula::neg(replace_all(f.sub(), s, t));
    case K::And: return Formula::conj(replace_all(f.left(), s, t), replace_all(f.right(), s, t));
    case K::Or: return Formula::disj(replace_all(f.left(), s, t), replace_all(f.right(), s, t));
    case K::Implies: return Formula::implies(replace_all(f.left(), s, t), replace_all(f.right(), s, t));
    case K::Iff: return Formula::iff(replace_all(f.left(), s, t), replace_all(f.right(), s, t));
    default: throw std::logic_error("replace_all: quantified formula");
  }
}

ProofBuilder::ProofBuilder(theories::Theory theory, std::vector<theories::Statement> premises)
    : theory_(std::move(theory)), premises_(std::move(premises)) {}

const Formula& ProofBuilder::formula(int id) const {
  if (id < 1 || id > static_cast<int>(steps_.size())) throw std::out_of_range("no step " + std::to_string(id));
  return steps_[id - 1].formula;
}

void ProofBuilder::reserve(const Formula& f) {
  for (const auto& n : syntax::all_names(f)) used_.insert(n);
}

void ProofBuilder::reserve(const Term& t) {
  for (const auto& n : syntax::all_names(t)) used_.insert(n);
}

std::string ProofBuilder::fresh(const std::string& base) {
  std::string n = syntax::fresh_name(base, used_);
  used_.insert(n);
  return n;
}

int ProofBuilder::push(Formula f, Rule r, RuleArgs a) {
  ProofStep st;
  st.id = static_cast<int>(steps_.size()) + 1;
  st.formula = std::move(f);
  st.rule = r;
  st.args = std::move(a);
  steps_.push_back(std::move(st));
  return steps_.back().id;
}

int ProofBuilder::axiom(const std::string& name) {
  if (const auto* a = theory_.find(name)) return push(a->formula, Rule::Axiom, {{}, {}, name});
  for (const auto& p : premises_)
    if (p.name == name) return push(p.formula, Rule::Axiom, {{}, {}, name});
  throw std::logic_error("builder: no axiom or premise '" + name + "'");
}

int ProofBuilder::taut(Formula f, std::vector<int> refs) { return push(std::move(f), Rule::Taut, {std::move(refs), {}, ""}); }

int ProofBuilder::mp(int minor, int major) {
  const Formula& m = formula(major);
  if (m.kind() != K::Implies) throw std::logic_error("mp: major premise is not an implication");
  return push(m.right(), Rule::MP, {{minor, major}, {}, ""});
}

int ProofBuilder::gen(int of, const std::string& var) {
  const Formula& p = formula(of);
  Sort s = Sort::N;
  for (const auto& [n, srt] : syntax::free_vars(p))
    if (n == var) s = srt;
  return push(Formula::forall(var, s, p), Rule::Gen, {{of}, {}, var});
}

int ProofBuilder::inst(int of, const Term& w) { return push(instance(formula(of), w), Rule::Inst, {{of}, w, ""}); }

int ProofBuilder::instf(int of, const std::string& fn) {
  return push(instance_fn(formula(of), fn), Rule::InstF, {{of}, {}, fn});
}

int ProofBuilder::refl(const Term& t) { return push(Formula::eq(t, t), Rule::Refl, {{}, t, ""}); }

int ProofBuilder::sym(int of) {
  const Formula& e = formula(of);
  return push(Formula::eq(e.rhs(), e.lhs()), Rule::Sym, {{of}, {}, ""});
}

int ProofBuilder::trans(int left, int right) {
  Formula f = Formula::eq(formula(left).lhs(), formula(right).rhs());
  return push(std::move(f), Rule::Trans, {{left, right}, {}, ""});
}

int ProofBuilder::cong(int of, const Term& context) {
  const Formula& e = formula(of);
  Formula f = Formula::eq(syntax::fill_hole(context, e.lhs()), syntax::fill_hole(context, e.rhs()));
  return push(std::move(f), Rule::Cong, {{of}, context, ""});
}

int ProofBuilder::inst_ax(const Formula& all, const Term& w) {
  return push(Formula::implies(all, instance(all, w)), Rule::InstAx, {{}, w, ""});
}

int ProofBuilder::inst_ax_fn(const Formula& all, const std::string& fn) {
  return push(Formula::implies(all, instance_fn(all, fn)), Rule::InstAx, {{}, {}, fn});
}

int ProofBuilder::ex_ax_fn(const Formula& ex, const std::string& fn) {
  return push(Formula::implies(instance_fn(ex, fn), ex), Rule::ExAx, {{}, {}, fn});
}

int ProofBuilder::exrule(int of, const std::string& var, Sort sort) {
  const Formula& p = formula(of);
  return push(Formula::implies(Formula::exists(var, sort, p.left()), p.right()), Rule::ExRule, {{of}, {}, var});
}

int ProofBuilder::gen_imp(int of, const std::string& var, Sort sort) {
  const Formula& p = formula(of);
  return push(Formula::implies(p.left(), Formula::forall(var, sort, p.right())), Rule::GenImp, {{of}, {}, var});
}

int ProofBuilder::leibniz(const Term& s, const Term& t, const Formula& phi, const Formula& phi2) {
  return push(Formula::implies(Formula::eq(s, t), Formula::implies(phi, phi2)), Rule::Leibniz, {});
}

int ProofBuilder::append(const std::vector<ProofStep>& proof) {
  if (proof.empty()) throw std::invalid_argument("append: empty proof");
  std::map<int, int> ids;
  for (const auto& st : proof) {
    RuleArgs a = st.args;
    for (auto& r : a.refs) {
      auto it = ids.find(r);
      // dangling references stay dangling; the kernel reports them
      r = it == ids.end() ? -1 : it->second;
    }
    ids[st.id] = push(st.formula, st.rule, std::move(a));
    reserve(st.formula);
    if (st.args.term) reserve(*st.args.term);
    if (!st.args.name.empty()) reserve(st.args.name);
  }
  return last();
}

int ProofBuilder::weaken(const Formula& gamma, int fact) {
  return taut(Formula::implies(gamma, formula(fact)), {fact});
}

int ProofBuilder::inst_under(const Formula& gamma, const Formula& hyp, const std::vector<Term>& ws) {
  std::vector<int> refs;
  Formula cur = hyp;
  for (const auto& w : ws) {
    refs.push_back(inst_ax(cur, w));
    cur = formula(refs.back()).right();
  }
  return taut(Formula::implies(gamma, cur), std::move(refs));
}

int ProofBuilder::rewrite_under(const Formula& gamma, int phi, int eq) {
  const Formula p = formula(phi).right();
  const Formula e = formula(eq).right();
  Formula p2 = replace_all(p, e.lhs(), e.rhs());
  int l = leibniz(e.lhs(), e.rhs(), p, p2);
  return taut(Formula::implies(gamma, p2), {phi, eq, l});
}

int ProofBuilder::sym_under(const Formula& gamma, int eq) {
  const Formula e = formula(eq).right();
  int r = refl(e.lhs());
  // replace the left occurrence only
  int l = leibniz(e.lhs(), e.rhs(), formula(r), Formula::eq(e.rhs(), e.lhs()));
  return taut(Formula::implies(gamma, Formula::eq(e.rhs(), e.lhs())), {eq, r, l});
}

int ProofBuilder::trans_under(const Formula& gamma, int left, int right) {
  const Formula a = formula(left).right(), b = formula(right).right();
  Formula out = Formula::eq(a.lhs(), b.rhs());
  int l = leibniz(b.lhs(), b.rhs(), a, out);
  return taut(Formula::implies(gamma, out), {left, right, l});
}

int ProofBuilder::assemble(const std::vector<Existential>& ex,
                           const std::function<int(const Formula&, const std::vector<Formula>&)>& core) {
  std::vector<Formula> hyps;
  std::vector<Sort> sorts;
  for (const auto& e : ex) {
    const Formula& q = formula(e.step);
    if (q.kind() != K::Exists) throw std::logic_error("assemble: not an existential: " + syntax::print(q));
    hyps.push_back(open_body(q, e.name));
    sorts.push_back(q.sort());
  }
  if (hyps.empty()) throw std::logic_error("assemble: nothing to open");
  const Formula gamma = conj_all(hyps);
  int cur = core(gamma, hyps);
  const Formula concl = formula(cur).right();
  for (std::size_t j = hyps.size(); j-- > 0;) {
    std::vector<Formula> rest(hyps.begin(), hyps.begin() + static_cast<std::ptrdiff_t>(j));
    int shaped = taut(Formula::implies(hyps[j], syntax::implies_chain(rest, concl)), {cur});
    int rule = exrule(shaped, ex[j].name, sorts[j]);
    cur = mp(ex[j].step, rule);
  }
  return cur;
}

}  // namespace etf::tactics
