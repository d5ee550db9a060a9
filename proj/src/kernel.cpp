#include "etf/kernel.hpp"

#include <map>
#include <set>
#include <unordered_map>

namespace etf::kernel {

using syntax::Formula;
using syntax::Sort;
using syntax::Term;
using K = Formula::Kind;

namespace {

struct RuleName {
  Rule rule;
  const char* name;
};

constexpr RuleName kRuleNames[] = {
    {Rule::Axiom, "axiom"},   {Rule::Taut, "taut"},       {Rule::MP, "mp"},         {Rule::Gen, "gen"},
    {Rule::Inst, "inst"},     {Rule::InstF, "instf"},     {Rule::ExIntro, "exintro"}, {Rule::ExRule, "exrule"},
    {Rule::Refl, "refl"},     {Rule::Sym, "sym"},         {Rule::Trans, "trans"},   {Rule::Cong, "cong"},
    {Rule::InstAx, "inst_ax"}, {Rule::ExAx, "ex_ax"},     {Rule::GenImp, "gen_imp"}, {Rule::Leibniz, "leibniz"},
};

}  // namespace

std::string to_string(Rule r) {
  for (const auto& rn : kRuleNames)
    if (rn.rule == r) return rn.name;
  return "?";
}

Rule parse_rule(const std::string& s) {
  for (const auto& rn : kRuleNames)
    if (s == rn.name) return rn.rule;
  throw std::invalid_argument("unknown rule '" + s + "'");
}

std::string to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::None: return "None";
    case ErrorKind::BadStepReference: return "BadStepReference";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::TautTooLarge: return "TautTooLarge";
    case ErrorKind::AxiomUnknown: return "AxiomUnknown";
    case ErrorKind::RuleMismatch: return "RuleMismatch";
    case ErrorKind::GoalMismatch: return "GoalMismatch";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "?";
}

// ------------------------------------------------------------------ taut

namespace {

// Propositional skeleton: leaves index into the letter table.
struct Prop {
  enum Op { Letter, Not, And, Or, Imp, Iff } op;
  int letter = -1;
  int a = -1, b = -1;
};

class Skeleton {
 public:
  int add(const Formula& f) {
    switch (f.kind()) {
      case K::Not: {
        int a = add(f.sub());
        return push({Prop::Not, -1, a, -1});
      }
      case K::And:
      case K::Or:
      case K::Implies:
      case K::Iff: {
        int a = add(f.left());
        int b = add(f.right());
        Prop::Op op = f.kind() == K::And ? Prop::And : f.kind() == K::Or ? Prop::Or : f.kind() == K::Implies ? Prop::Imp : Prop::Iff;
        return push({op, -1, a, b});
      }
      default: {
        std::string key = syntax::alpha_key(f);
        auto it = letters_.find(key);
        int idx;
        if (it == letters_.end()) {
          idx = static_cast<int>(letters_.size());
          letters_.emplace(std::move(key), idx);
        } else {
          idx = it->second;
        }
        return push({Prop::Letter, idx, -1, -1});
      }
    }
  }

  int letter_count() const { return static_cast<int>(letters_.size()); }

  // Evaluates node over 64 assignments at once.
  void eval_all(const std::vector<std::uint64_t>& letter_bits, std::vector<std::uint64_t>& out) const {
    out.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Prop& p = nodes_[i];
      switch (p.op) {
        case Prop::Letter: out[i] = letter_bits[p.letter]; break;
        case Prop::Not: out[i] = ~out[p.a]; break;
        case Prop::And: out[i] = out[p.a] & out[p.b]; break;
        case Prop::Or: out[i] = out[p.a] | out[p.b]; break;
        case Prop::Imp: out[i] = ~out[p.a] | out[p.b]; break;
        case Prop::Iff: out[i] = ~(out[p.a] ^ out[p.b]); break;
      }
    }
  }

 private:
  int push(Prop p) {
    nodes_.push_back(p);
    return static_cast<int>(nodes_.size()) - 1;
  }
  std::vector<Prop> nodes_;  // children always precede parents
  std::unordered_map<std::string, int> letters_;
};

}  // namespace

int count_letters(const std::vector<Formula>& fs) {
  Skeleton sk;
  for (const auto& f : fs) sk.add(f);
  return sk.letter_count();
}

bool taut_check(const std::vector<Formula>& premises, const Formula& target) {
  Skeleton sk;
  std::vector<int> roots;
  for (const auto& p : premises) roots.push_back(sk.add(p));
  const int target_root = sk.add(target);
  const int n = sk.letter_count();
  if (n > kMaxTautLetters)
    throw TautTooLarge("tautology check needs " + std::to_string(n) + " letters, limit is " +
                       std::to_string(kMaxTautLetters));
  const std::uint64_t rows = std::uint64_t{1} << n;
  const std::uint64_t chunks = rows <= 64 ? 1 : rows / 64;
  const std::uint64_t valid_mask = rows >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rows) - 1);
  static constexpr std::uint64_t kPatterns[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
                                                 0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  std::vector<std::uint64_t> bits(n), vals;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (int i = 0; i < n; ++i) bits[i] = i < 6 ? kPatterns[i] : (((c >> (i - 6)) & 1U) ? ~std::uint64_t{0} : 0);
    sk.eval_all(bits, vals);
    std::uint64_t ok = valid_mask;
    for (int r : roots) ok &= vals[r];
    if (ok & ~vals[target_root]) return false;
  }
  return true;
}

// --------------------------------------------------------------- leibniz

namespace {

bool mentions(const Term& t, const std::set<std::string>& names) {
  if ((t.is_var() || t.is_app()) && names.count(t.name())) return true;
  for (const auto& a : t.args())
    if (mentions(a, names)) return true;
  return false;
}

bool leib_term(const Term& a, const Term& b, const Term& s, const Term& t, const std::set<std::string>& bound) {
  if (a == b) return true;
  if (a == s && b == t && !mentions(s, bound) && !mentions(t, bound)) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size()) return false;
  if (a.is_var() || a.is_zero()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!leib_term(a.args()[i], b.args()[i], s, t, bound)) return false;
  return true;
}

bool leib_formula(const Formula& a, const Formula& b, const Term& s, const Term& t, std::set<std::string>& bound) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == K::Eq) return leib_term(a.lhs(), b.lhs(), s, t, bound) && leib_term(a.rhs(), b.rhs(), s, t, bound);
  if (a.is_quantifier()) {
    if (a.var() != b.var() || a.sort() != b.sort()) return false;
    const bool was = bound.count(a.var()) > 0;
    bound.insert(a.var());
    const bool ok = leib_formula(a.body(), b.body(), s, t, bound);
    if (!was) bound.erase(a.var());
    return ok;
  }
  if (!leib_formula(a.sub(0), b.sub(0), s, t, bound)) return false;
  return !a.is_binary() || leib_formula(a.sub(1), b.sub(1), s, t, bound);
}

}  // namespace

bool leibniz_instance(const Formula& phi1, const Formula& phi2, const Term& s, const Term& t) {
  std::set<std::string> bound;
  return leib_formula(phi1, phi2, s, t, bound);
}

// ----------------------------------------------------------------- check

namespace {

struct Failure {
  ErrorKind kind;
  std::string message;
};

int count_holes(const Term& t) {
  int n = syntax::is_hole(t) ? 1 : 0;
  for (const auto& a : t.args()) n += count_holes(a);
  return n;
}

bool free_in(const Formula& f, const std::string& v) { return syntax::free_names(f).count(v) > 0; }

std::optional<Sort> free_sort(const Formula& f, const std::string& v) {
  for (const auto& [n, s] : syntax::free_vars(f))
    if (n == v) return s;
  return std::nullopt;
}

class Checker {
 public:
  Checker(const theories::Theory& th, const std::vector<theories::Statement>& prem, const syntax::Context* ctx)
      : theory_(th), premises_(prem), ctx_(ctx) {}

  std::optional<Failure> step(const ProofStep& st) {
    if (syntax::has_exists_unique(st.formula)) return fail(ErrorKind::Malformed, "formula is not desugared");
    if (auto bad = check_context(st.formula)) return bad;
    switch (st.rule) {
      case Rule::Axiom: return axiom(st);
      case Rule::Taut: return taut(st);
      case Rule::MP: return mp(st);
      case Rule::Gen: return gen(st);
      case Rule::Inst:
      case Rule::InstF: return inst(st);
      case Rule::ExIntro: return exintro(st);
      case Rule::ExRule: return exrule(st);
      case Rule::Refl: return refl(st);
      case Rule::Sym: return sym(st);
      case Rule::Trans: return trans(st);
      case Rule::Cong: return cong(st);
      case Rule::InstAx: return inst_ax(st);
      case Rule::ExAx: return ex_ax(st);
      case Rule::GenImp: return gen_imp(st);
      case Rule::Leibniz: return leibniz(st);
    }
    return fail(ErrorKind::Malformed, "unknown rule");
  }

  void record(const ProofStep& st) { proved_.emplace(st.id, &st.formula); }

 private:
  static std::optional<Failure> fail(ErrorKind k, std::string msg) { return Failure{k, std::move(msg)}; }

  std::optional<Failure> check_context(const Formula& f) const {
    if (!ctx_) return std::nullopt;
    for (const auto& [n, s] : syntax::free_vars(f)) {
      auto d = ctx_->lookup(n);
      if (!d) return fail(ErrorKind::Malformed, "undeclared free variable '" + n + "'");
      if (*d != s) return fail(ErrorKind::Malformed, "'" + n + "' used at sort " + syntax::to_string(s));
    }
    return std::nullopt;
  }

  // Resolves reference i of st, or reports why it cannot.
  std::optional<Failure> ref(const ProofStep& st, std::size_t i, const Formula*& out) const {
    if (st.args.refs.size() <= i) return fail(ErrorKind::Malformed, "missing step reference");
    const int id = st.args.refs[i];
    auto it = proved_.find(id);
    if (id >= st.id || it == proved_.end())
      return fail(ErrorKind::BadStepReference, "reference to step " + std::to_string(id) + " which is not an earlier step");
    out = it->second;
    return std::nullopt;
  }

  std::optional<Failure> expect_refs(const ProofStep& st, std::size_t n) const {
    if (st.args.refs.size() != n)
      return fail(ErrorKind::Malformed, "rule " + to_string(st.rule) + " takes " + std::to_string(n) + " step reference(s)");
    return std::nullopt;
  }

  std::optional<Failure> axiom(const ProofStep& st) const {
    const Formula* f = nullptr;
    if (const auto* a = theory_.find(st.args.name)) f = &a->formula;
    for (const auto& p : premises_)
      if (!f && p.name == st.args.name) f = &p.formula;
    if (!f) return fail(ErrorKind::AxiomUnknown, "no axiom or premise named '" + st.args.name + "'");
    if (!syntax::alpha_equal(*f, st.formula)) return fail(ErrorKind::RuleMismatch, "formula differs from " + st.args.name);
    return std::nullopt;
  }

  std::optional<Failure> taut(const ProofStep& st) const {
    std::vector<Formula> prem;
    for (std::size_t i = 0; i < st.args.refs.size(); ++i) {
      const Formula* f = nullptr;
      if (auto bad = ref(st, i, f)) return bad;
      prem.push_back(*f);
    }
    try {
      if (!taut_check(prem, st.formula)) return fail(ErrorKind::RuleMismatch, "not a tautological consequence");
    } catch (const TautTooLarge& e) {
      return fail(ErrorKind::TautTooLarge, e.what());
    }
    return std::nullopt;
  }

  std::optional<Failure> mp(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 2)) return bad;
    const Formula *minor = nullptr, *major = nullptr;
    if (auto bad = ref(st, 0, minor)) return bad;
    if (auto bad = ref(st, 1, major)) return bad;
    if (major->kind() != K::Implies) return fail(ErrorKind::RuleMismatch, "major premise is not an implication");
    if (!syntax::alpha_equal(major->left(), *minor)) return fail(ErrorKind::RuleMismatch, "minor premise does not match antecedent");
    if (!syntax::alpha_equal(major->right(), st.formula)) return fail(ErrorKind::RuleMismatch, "conclusion does not match consequent");
    return std::nullopt;
  }

  std::optional<Failure> binder_sort(const Formula& stated, const Formula& inner, const std::string& v) const {
    if (auto s = free_sort(inner, v); s && *s != stated.sort())
      return fail(ErrorKind::SideConditionViolated, "variable '" + v + "' bound at the wrong sort");
    return std::nullopt;
  }

  std::optional<Failure> gen(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* prem = nullptr;
    if (auto bad = ref(st, 0, prem)) return bad;
    if (st.formula.kind() != K::Forall || st.formula.var() != st.args.name)
      return fail(ErrorKind::RuleMismatch, "conclusion is not a generalization over '" + st.args.name + "'");
    if (auto bad = binder_sort(st.formula, *prem, st.args.name)) return bad;
    if (!syntax::alpha_equal(st.formula.body(), *prem)) return fail(ErrorKind::RuleMismatch, "body differs from premise");
    return std::nullopt;
  }

  // phi[w/x] where the witness is a term (x:N) or a function variable.
  std::optional<Failure> instance(const Formula& quant, const RuleArgs& args, Formula& out) const {
    const std::string& x = quant.var();
    if (quant.sort() == Sort::N) {
      if (!args.term) return fail(ErrorKind::Malformed, "number instantiation needs a term");
      if (ctx_) {
        for (const auto& [n, s] : syntax::free_vars(*args.term)) {
          auto d = ctx_->lookup(n);
          if (!d || *d != s) return fail(ErrorKind::SideConditionViolated, "witness uses undeclared '" + n + "'");
        }
      }
      out = syntax::substitute(quant.body(), x, *args.term);
      return std::nullopt;
    }
    if (args.name.empty() || args.term) return fail(ErrorKind::Malformed, "function instantiation needs a function variable");
    if (ctx_) {
      auto d = ctx_->lookup(args.name);
      if (!d || *d != quant.sort())
        return fail(ErrorKind::SideConditionViolated,
                    "'" + args.name + "' is not declared of sort " + syntax::to_string(quant.sort()));
    }
    out = syntax::rename_function(quant.body(), x, args.name);
    return std::nullopt;
  }

  std::optional<Failure> inst(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* prem = nullptr;
    if (auto bad = ref(st, 0, prem)) return bad;
    if (prem->kind() != K::Forall) return fail(ErrorKind::RuleMismatch, "premise is not universally quantified");
    const bool is_fn = prem->sort() != Sort::N;
    if (is_fn != (st.rule == Rule::InstF))
      return fail(ErrorKind::RuleMismatch, is_fn ? "use instf for function quantifiers" : "use inst for number quantifiers");
    Formula expected = *prem;
    if (auto bad = instance(*prem, st.args, expected)) return bad;
    if (!syntax::alpha_equal(expected, st.formula)) return fail(ErrorKind::RuleMismatch, "conclusion is not the instance");
    return std::nullopt;
  }

  std::optional<Failure> exintro(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* prem = nullptr;
    if (auto bad = ref(st, 0, prem)) return bad;
    if (st.formula.kind() != K::Exists) return fail(ErrorKind::RuleMismatch, "conclusion is not existential");
    Formula expected = *prem;
    if (auto bad = instance(st.formula, st.args, expected)) return bad;
    if (!syntax::alpha_equal(expected, *prem)) return fail(ErrorKind::RuleMismatch, "premise is not the witnessed instance");
    return std::nullopt;
  }

  std::optional<Failure> exrule(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* prem = nullptr;
    if (auto bad = ref(st, 0, prem)) return bad;
    const Formula& f = st.formula;
    if (f.kind() != K::Implies || f.left().kind() != K::Exists || f.left().var() != st.args.name)
      return fail(ErrorKind::RuleMismatch, "conclusion is not (ex " + st.args.name + ". phi) -> psi");
    const Formula& psi = f.right();
    if (free_in(psi, st.args.name))
      return fail(ErrorKind::SideConditionViolated, "'" + st.args.name + "' is free in the consequent");
    if (auto bad = binder_sort(f.left(), *prem, st.args.name)) return bad;
    if (!syntax::alpha_equal(Formula::implies(f.left().body(), psi), *prem))
      return fail(ErrorKind::RuleMismatch, "premise is not phi -> psi");
    return std::nullopt;
  }

  std::optional<Failure> refl(const ProofStep& st) const {
    if (!st.args.term) return fail(ErrorKind::Malformed, "refl needs a term");
    if (!(st.formula == Formula::eq(*st.args.term, *st.args.term)))
      return fail(ErrorKind::RuleMismatch, "conclusion is not t=t for the given term");
    return std::nullopt;
  }

  std::optional<Failure> equation(const ProofStep& st, std::size_t i, const Formula*& out) const {
    if (auto bad = ref(st, i, out)) return bad;
    if (out->kind() != K::Eq) return fail(ErrorKind::RuleMismatch, "premise is not an equation");
    return std::nullopt;
  }

  std::optional<Failure> sym(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* e = nullptr;
    if (auto bad = equation(st, 0, e)) return bad;
    if (!(st.formula == Formula::eq(e->rhs(), e->lhs()))) return fail(ErrorKind::RuleMismatch, "conclusion is not the symmetric equation");
    return std::nullopt;
  }

  std::optional<Failure> trans(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 2)) return bad;
    const Formula *a = nullptr, *b = nullptr;
    if (auto bad = equation(st, 0, a)) return bad;
    if (auto bad = equation(st, 1, b)) return bad;
    if (!(a->rhs() == b->lhs())) return fail(ErrorKind::RuleMismatch, "middle terms differ");
    if (!(st.formula == Formula::eq(a->lhs(), b->rhs()))) return fail(ErrorKind::RuleMismatch, "conclusion does not chain the premises");
    return std::nullopt;
  }

  std::optional<Failure> cong(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* e = nullptr;
    if (auto bad = equation(st, 0, e)) return bad;
    if (!st.args.term) return fail(ErrorKind::Malformed, "cong needs a context term");
    if (count_holes(*st.args.term) != 1) return fail(ErrorKind::Malformed, "context must contain exactly one hole");
    Formula expected =
        Formula::eq(syntax::fill_hole(*st.args.term, e->lhs()), syntax::fill_hole(*st.args.term, e->rhs()));
    if (!(st.formula == expected)) return fail(ErrorKind::RuleMismatch, "conclusion is not C[s]=C[t]");
    return std::nullopt;
  }

  std::optional<Failure> inst_ax(const ProofStep& st) const {
    if (!st.args.refs.empty()) return fail(ErrorKind::Malformed, "inst_ax takes no step references");
    const Formula& f = st.formula;
    if (f.kind() != K::Implies || f.left().kind() != K::Forall)
      return fail(ErrorKind::RuleMismatch, "formula is not (all x. phi) -> psi");
    Formula expected = f;
    if (auto bad = instance(f.left(), st.args, expected)) return bad;
    if (!syntax::alpha_equal(expected, f.right())) return fail(ErrorKind::RuleMismatch, "consequent is not the instance");
    return std::nullopt;
  }

  std::optional<Failure> ex_ax(const ProofStep& st) const {
    if (!st.args.refs.empty()) return fail(ErrorKind::Malformed, "ex_ax takes no step references");
    const Formula& f = st.formula;
    if (f.kind() != K::Implies || f.right().kind() != K::Exists)
      return fail(ErrorKind::RuleMismatch, "formula is not psi -> ex x. phi");
    Formula expected = f;
    if (auto bad = instance(f.right(), st.args, expected)) return bad;
    if (!syntax::alpha_equal(expected, f.left())) return fail(ErrorKind::RuleMismatch, "antecedent is not the instance");
    return std::nullopt;
  }

  std::optional<Failure> gen_imp(const ProofStep& st) const {
    if (auto bad = expect_refs(st, 1)) return bad;
    const Formula* prem = nullptr;
    if (auto bad = ref(st, 0, prem)) return bad;
    const Formula& f = st.formula;
    if (f.kind() != K::Implies || f.right().kind() != K::Forall || f.right().var() != st.args.name)
      return fail(ErrorKind::RuleMismatch, "conclusion is not psi -> all " + st.args.name + ". phi");
    if (free_in(f.left(), st.args.name))
      return fail(ErrorKind::SideConditionViolated, "'" + st.args.name + "' is free in the antecedent");
    if (auto bad = binder_sort(f.right(), *prem, st.args.name)) return bad;
    if (!syntax::alpha_equal(Formula::implies(f.left(), f.right().body()), *prem))
      return fail(ErrorKind::RuleMismatch, "premise is not psi -> phi");
    return std::nullopt;
  }

  std::optional<Failure> leibniz(const ProofStep& st) const {
    if (!st.args.refs.empty()) return fail(ErrorKind::Malformed, "leibniz takes no step references");
    const Formula& f = st.formula;
    if (f.kind() != K::Implies || f.left().kind() != K::Eq || f.right().kind() != K::Implies)
      return fail(ErrorKind::RuleMismatch, "formula is not s=t -> (phi -> phi')");
    if (!leibniz_instance(f.right().left(), f.right().right(), f.left().lhs(), f.left().rhs()))
      return fail(ErrorKind::RuleMismatch, "consequent is not a replacement instance");
    return std::nullopt;
  }

  const theories::Theory& theory_;
  const std::vector<theories::Statement>& premises_;
  const syntax::Context* ctx_;
  std::map<int, const Formula*> proved_;
};

}  // namespace

CheckResult check_proof(const theories::Theory& theory, const std::vector<theories::Statement>& premises,
                        const std::vector<ProofStep>& proof, const Formula& goal, const syntax::Context* ctx) {
  CheckResult res;
  if (proof.empty()) {
    res.error = ErrorKind::GoalMismatch;
    res.message = "empty proof";
    return res;
  }
  Checker checker(theory, premises, ctx);
  std::optional<int> prev;
  for (const auto& st : proof) {
    if (prev && st.id <= *prev) {
      res.failing_step = st.id;
      res.error = ErrorKind::BadStepReference;
      res.message = "step ids must be strictly increasing";
      return res;
    }
    prev = st.id;
    std::optional<Failure> bad;
    try {
      bad = checker.step(st);
    } catch (const std::exception& e) {
      bad = Failure{ErrorKind::Malformed, e.what()};
    }
    if (bad) {
      res.failing_step = st.id;
      res.error = bad->kind;
      res.message = "step " + std::to_string(st.id) + " (" + to_string(st.rule) + "): " + to_string(bad->kind) + ": " +
                    bad->message;
      return res;
    }
    checker.record(st);
  }
  if (!syntax::alpha_equal(proof.back().formula, goal)) {
    res.failing_step = proof.back().id;
    res.error = ErrorKind::GoalMismatch;
    res.message = "last step does not prove the goal";
    return res;
  }
  res.ok = true;
  res.message = "ok: " + std::to_string(proof.size()) + " steps";
  return res;
}

}  // namespace etf::kernel
