#include "etf/model/builtins.hpp"

#include <sstream>

#include "etf/model/arith.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/constructions.hpp"

namespace etf::model {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"plus", "times", "sg", "sgbar", "odd",  "fprime",   "pred",
                                                 "monus", "lt",   "t",  "pair",  "p1",   "p2",       "q",
                                                 "identity", "double", "const:<k>"};
  return names;
}

FuncValue builtin(std::string_view name) {
  const Arith& a = arith(Basis::Pra);
  const Arith& w = arith(Basis::Wpra);
  if (name == "plus") return a.plus;
  if (name == "times") return a.times;
  if (name == "sg") return a.sg;
  if (name == "sgbar") return a.sgbar;
  if (name == "odd") return a.odd;
  if (name == "fprime") return w.fprime;
  if (name == "pred") return a.pred;
  if (name == "monus") return a.monus;
  if (name == "lt") return a.lt;
  const Pairing& p = pairing(Realization::Fast);
  if (name == "t") return p.t;
  if (name == "pair") return p.pair;
  if (name == "p1") return p.p1;
  if (name == "p2") return p.p2;
  if (name == "q") {
    static const FuncValue q = quotient_fn(Realization::Fast);
    return q;
  }
  if (name == "identity") return fix_nr(proj(0), Nat(0), Nat(0));
  if (name == "double") return fix_nr(compose(lift2(a.plus), proj(0), proj(0), proj(0)), Nat(0), Nat(0));
  if (name.substr(0, 6) == "const:") {
    try {
      return const_fn(Nat::parse(name.substr(6)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad constant in '" + std::string(name) + "'");
    }
  }
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "'");
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Env parse_env(std::string_view text) {
  Env env;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::string s = trim(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    const std::string where = "env line " + std::to_string(no) + ": ";
    if (eq == std::string::npos) throw std::invalid_argument(where + "expected 'name = value'");
    std::string name = trim(std::string_view(s).substr(0, eq)), value = trim(std::string_view(s).substr(eq + 1));
    if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) throw std::invalid_argument(where + "bad name '" + name + "'");
    if (value.rfind("builtin:", 0) == 0) {
      try {
        env.set(name, builtin(value.substr(8)));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + e.what());
      }
    } else {
      try {
        env.set(name, Nat::parse(value));
      } catch (const std::exception&) {
        throw std::invalid_argument(where + "expected a natural number or builtin:<name>, got '" + value + "'");
      }
    }
  }
  return env;
}

syntax::Context env_context(const Env& env) {
  syntax::Context ctx;
  for (const auto& [n, v] : env.numbers) ctx.declare(n, syntax::Sort::N);
  for (const auto& [n, f] : env.functions) ctx.declare(n, syntax::function_sort(f.arity()));
  return ctx;
}

}  // namespace etf::model
