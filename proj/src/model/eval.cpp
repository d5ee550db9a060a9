#include "etf/model/eval.hpp"

#include "etf/model/combinators.hpp"

namespace etf::model {

using syntax::Formula;
using syntax::Sort;
using syntax::Term;

Nat eval_term(const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Zero: return Nat(0);
    case Term::Kind::Succ: {
      // numerals are common and deep; count instead of recursing
      std::uint64_t k = 0;
      const Term* cur = &t;
      while (cur->is_succ()) {
        ++k;
        cur = &cur->arg(0);
      }
      return eval_term(*cur, env) + Nat(k);
    }
    case Term::Kind::Var: {
      auto it = env.numbers.find(t.name());
      if (it == env.numbers.end()) throw syntax::UnboundVariable(t.name());
      return it->second;
    }
    case Term::Kind::App: {
      auto it = env.functions.find(t.name());
      if (it == env.functions.end()) throw syntax::UnboundVariable(t.name());
      std::array<Nat, 3> v;
      for (std::size_t i = 0; i < t.args().size(); ++i) v[i] = eval_term(t.arg(i), env);
      return it->second.call(std::span<const Nat>(v.data(), t.args().size()));
    }
  }
  return Nat(0);
}

namespace {

class Checker {
 public:
  Checker(std::uint64_t B, const FunctionWitnesses* w) : B_(B), w_(w) {}

  bool run(const Formula& f, Env& env) const {
    switch (f.kind()) {
      case Formula::Kind::Eq: return eval_term(f.lhs(), env) == eval_term(f.rhs(), env);
      case Formula::Kind::Not: return !run(f.sub(), env);
      case Formula::Kind::And: return run(f.left(), env) && run(f.right(), env);
      case Formula::Kind::Or: return run(f.left(), env) || run(f.right(), env);
      case Formula::Kind::Implies: return !run(f.left(), env) || run(f.right(), env);
      case Formula::Kind::Iff: return run(f.left(), env) == run(f.right(), env);
      case Formula::Kind::ExistsUnique: return run(syntax::desugar(f), env);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: break;
    }
    const bool all = f.kind() == Formula::Kind::Forall;
    if (f.sort() == Sort::N) {
      auto saved = save_number(env, f.var());
      bool result = all;
      for (std::uint64_t i = 0; i <= B_; ++i) {
        env.numbers[f.var()] = Nat(i);
        if (run(f.body(), env) != all) {
          result = !all;
          break;
        }
      }
      restore_number(env, f.var(), saved);
      return result;
    }
    if (!w_) throw FunctionQuantifier("function quantifier over '" + f.var() + "' needs an explicit witness");
    auto saved = save_function(env, f.var());
    bool result;
    if (all) {
      result = true;
      auto it = w_->pool.find(syntax::arity(f.sort()));
      if (it == w_->pool.end() || it->second.empty())
        throw FunctionQuantifier("no sample functions of sort " + syntax::to_string(f.sort()));
      for (const auto& g : it->second) {
        env.functions[f.var()] = g;
        if (!run(f.body(), env)) {
          result = false;
          break;
        }
      }
    } else {
      if (!w_->exists) throw FunctionQuantifier("no witness for '" + f.var() + "'");
      FuncValue g = w_->exists(f.var(), f.sort(), f.body(), env);
      if (g && g.arity() != syntax::arity(f.sort()))
        throw FunctionQuantifier("witness for '" + f.var() + "' has the wrong arity");
      if (g) {
        env.functions[f.var()] = g;
        result = run(f.body(), env);
      } else {
        result = false;
      }
    }
    restore_function(env, f.var(), saved);
    return result;
  }

 private:
  static std::optional<Nat> save_number(const Env& env, const std::string& v) {
    auto it = env.numbers.find(v);
    return it == env.numbers.end() ? std::nullopt : std::optional<Nat>(it->second);
  }
  static void restore_number(Env& env, const std::string& v, const std::optional<Nat>& s) {
    if (s)
      env.numbers[v] = *s;
    else
      env.numbers.erase(v);
  }
  static std::optional<FuncValue> save_function(const Env& env, const std::string& v) {
    auto it = env.functions.find(v);
    return it == env.functions.end() ? std::nullopt : std::optional<FuncValue>(it->second);
  }
  static void restore_function(Env& env, const std::string& v, const std::optional<FuncValue>& s) {
    if (s)
      env.functions[v] = *s;
    else
      env.functions.erase(v);
  }

  std::uint64_t B_;
  const FunctionWitnesses* w_;
};

}  // namespace

bool eval_open(const Formula& phi, const Env& env) {
  if (!syntax::is_open(phi)) throw std::invalid_argument("eval_open: formula has quantifiers");
  Env copy = env;
  return Checker(0, nullptr).run(phi, copy);
}

bool bounded_check(const Formula& phi, const Env& env, std::uint64_t B) {
  Env copy = env;
  return Checker(B, nullptr).run(phi, copy);
}

bool bounded_check(const Formula& phi, const Env& env, std::uint64_t B, const FunctionWitnesses& w) {
  Env copy = env;
  return Checker(B, &w).run(phi, copy);
}

FuncValue internalize_fn(const Term& t, const std::array<std::string, 3>& vars, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Zero: return lift1(const_fn(Nat(0)));
    case Term::Kind::Var: {
      for (int i = 0; i < 3; ++i)
        if (vars[i] == t.name()) return proj(i);
      return lift1(const_fn(eval_term(t, env)));
    }
    case Term::Kind::Succ: {
      FuncValue a = internalize_fn(t.arg(0), vars, env);
      return compose(lift1(succ_fn()), a, a, a);
    }
    case Term::Kind::App: {
      auto it = env.functions.find(t.name());
      if (it == env.functions.end()) throw syntax::UnboundVariable(t.name());
      std::vector<FuncValue> a;
      for (const auto& s : t.args()) a.push_back(internalize_fn(s, vars, env));
      switch (a.size()) {
        case 1: return compose(lift1(it->second), a[0], a[0], a[0]);
        case 2: return compose(lift2(it->second), a[0], a[1], a[1]);
        default: return compose(it->second, a[0], a[1], a[2]);
      }
    }
  }
  return lift1(const_fn(Nat(0)));
}

}  // namespace etf::model
