#pragma once

// Standard semantics of terms and formulas over the naturals.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "etf/model/func.hpp"
#include "etf/syntax.hpp"

namespace etf::model {

class FunctionQuantifier : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Env {
  std::map<std::string, Nat> numbers;
  std::map<std::string, FuncValue> functions;

  Env& set(const std::string& name, Nat v) {
    numbers[name] = std::move(v);
    return *this;
  }
  Env& set(const std::string& name, FuncValue f) {
    functions[name] = std::move(f);
    return *this;
  }
};

Nat eval_term(const syntax::Term& t, const Env& env);  // UnboundVariable
bool eval_open(const syntax::Formula& phi, const Env& env);

// Supplies function witnesses to bounded_check. `exists` returns the witness
// for an existential function quantifier (empty FuncValue: no witness, the
// quantifier counts as false). `pool` lists the sample functions a universal
// function quantifier of each arity ranges over.
struct FunctionWitnesses {
  std::function<FuncValue(const std::string& var, syntax::Sort sort, const syntax::Formula& body, const Env& env)>
      exists;
  std::map<int, std::vector<FuncValue>> pool;
};

// Number quantifiers range over [0,B]. Function quantifiers throw
// FunctionQuantifier unless witnesses are given.
bool bounded_check(const syntax::Formula& phi, const Env& env, std::uint64_t B);
bool bounded_check(const syntax::Formula& phi, const Env& env, std::uint64_t B, const FunctionWitnesses& w);

// Ternary function (m,n,r) -> value of t, built only from the initial
// functions and composition. `vars` names the three argument positions; other
// free variables of t are read from env.
FuncValue internalize_fn(const syntax::Term& t, const std::array<std::string, 3>& vars, const Env& env);

}  // namespace etf::model
