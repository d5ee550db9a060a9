// LI and LEQ: open formulas, monus and the order over the pra arithmetic.

#include "etf/model/arith.hpp"
#include "etf/tactics.hpp"
#include "suite.hpp"

namespace etf::harness::detail {

namespace {

model::Env pra_env(const Context& c) { return c.env(model::arith_env(model::arith(model::Basis::Pra))); }

Claim formula_claim(std::string label, std::string text, std::uint64_t B, bool with_proof = false) {
  return {std::move(label), [text = std::move(text), B, with_proof](const Context& c) {
            const model::Env env = pra_env(c);
            ClaimResult r = check_formula(text, env, B);
            if (r.status == Status::Fail || !with_proof) return r;
            return check_compilation_proof(parse_claim(text, env));
          }};
}

std::string numeral(std::uint64_t k) {
  std::string s = "0";
  for (std::uint64_t i = 0; i < k; ++i) s = "S(" + s + ")";
  return s;
}

// Random propositional combination of =, LT and LE over m and n.
std::string random_order_formula(std::mt19937_64& gen, int depth) {
  static const std::vector<std::string> terms = {"m", "n", "S(m)", "S(n)", "0", "plus(m,n)", "pred(n)", "S(S(0))"};
  auto pick = [&](std::size_t k) { return static_cast<std::size_t>(gen() % k); };
  if (depth == 0 || pick(3) == 0) {
    const std::string a = terms[pick(terms.size())], b = terms[pick(terms.size())];
    switch (pick(3)) {
      case 0: return "LT(" + a + "," + b + ")";
      case 1: return "LE(" + a + "," + b + ")";
      default: return a + "=" + b;
    }
  }
  const std::string l = random_order_formula(gen, depth - 1);
  switch (pick(5)) {
    case 0: return "~(" + l + ")";
    case 1: return "(" + l + ") & (" + random_order_formula(gen, depth - 1) + ")";
    case 2: return "(" + l + ") | (" + random_order_formula(gen, depth - 1) + ")";
    case 3: return "(" + l + ") -> (" + random_order_formula(gen, depth - 1) + ")";
    default: return "(" + l + ") <-> (" + random_order_formula(gen, depth - 1) + ")";
  }
}

}  // namespace

SuiteDef suite_li(const Options& opt) {
  const std::uint64_t B = main_bound(opt, 25);
  SuiteDef s;
  s.bounds = {{"n", B}};
  const std::vector<std::tuple<const char*, const char*, bool>> items = {
      {"i", "monus(S(0),S(n))=0", false},
      {"ii", "monus(S(S(0)),S(S(n)))=0", false},
      {"iii", "n=0 | n=S(0) | monus(S(S(0)),n)=0", false},
      {"iv", "~(m=0) -> (pred(n)=m <-> n=S(m))", false},
      {"v", "monus(0,n)=0", false},
      {"vi", "monus(n,S(0))=0 <-> n=0 | n=S(0)", false},
      {"vii", "monus(S(0),n)=0 <-> ~(n=0)", false},
      {"viii", "n=S(0) <-> plus(monus(n,S(0)),monus(S(0),n))=0", true},
      {"ix", "(n=S(0) -> times(monus(S(S(0)),n),n)=S(0)) & (~(n=S(0)) -> times(monus(S(S(0)),n),n)=0)", false},
      {"xiv", "pred(n)=0 -> n=0 | n=S(0)", false},
      {"xv", "monus(S(n),S(m))=monus(n,m)", false},
      {"xvi", "monus(plus(n,m),m)=n", false},
      {"xvii", "plus(n,r)=plus(m,r) -> n=m", false},
      {"xviii", "n=m | r=0 <-> times(n,sg(r))=times(m,sg(r))", false},
      {"xix", "monus(n,n)=0", false},
      {"xx", "monus(S(n),n)=S(0)", false},
      {"xxi", "~(n=0) -> plus(pred(n),S(m))=plus(n,m)", false},
      {"xxii", "monus(n,m)=0 | plus(monus(n,m),m)=n", false},
      {"xxiii", "monus(n,m)=0 & monus(m,n)=0 -> n=m", false},
      {"xxiv", "monus(n,m)=0 & monus(m,n)=0 <-> n=m", true},
      {"xxv", "monus(n,m)=0 | monus(m,n)=0", false},
      {"xxvi", "monus(n,m)=0 <-> ex r:N. plus(n,r)=m", false},
  };
  for (const auto& [item, text, proof] : items) s.claims.push_back(formula_claim(std::string("L8.") + item, text, B, proof));

  // n = k* <-> P(...P(n))=1 with k-1 P's, for every k >= 2 in the box
  s.claims.push_back({"L8.x", [B](const Context& c) {
                        const model::Env env = pra_env(c);
                        for (std::uint64_t k = 2; k <= B; ++k) {
                          std::string iterated = "n";
                          for (std::uint64_t i = 0; i + 1 < k; ++i) iterated = "pred(" + iterated + ")";
                          ClaimResult r = check_formula("n=" + numeral(k) + " <-> " + iterated + "=S(0)", env, B);
                          if (r.status == Status::Fail) {
                            r.counterexample.insert(r.counterexample.begin(), {"k", num(k)});
                            return r;
                          }
                        }
                        return pass();
                      }});
  return s;
}

SuiteDef suite_leq(const Options& opt) {
  const std::uint64_t B = main_bound(opt, 25);
  SuiteDef s;
  s.bounds = {{"n", B}};
  s.claims.push_back({"L10", [B](const Context& c) {
                        const model::Env env = pra_env(c);
                        return first_failure({
                            [&] {
                              return check_formula(
                                  "lt(m,0)=0 & (lt(m,S(n))=S(0) <-> lt(m,n)=S(0) | m=n) & "
                                  "(lt(m,S(n))=0 <-> ~(lt(m,n)=S(0)) & ~(m=n))",
                                  env, B);
                            },
                            [&] { return agree(env.functions.at("lt"), model::arith_oracle().lt, B, "lt against host <"); },
                        });
                      }});
  const std::vector<std::pair<const char*, const char*>> items = {
      {"i", "~LT(m,0)"},
      {"ii", "LT(m,S(n)) <-> LE(m,n)"},
      {"v", "LE(0,n)"},
      {"vi",
       "(LE(m,n) <-> monus(m,n)=0) & (monus(m,n)=0 <-> plus(monus(n,m),m)=n) & "
       "(plus(monus(n,m),m)=n <-> ex r:N. plus(m,r)=n)"},
      {"vii", "(LT(m,n) <-> LT(S(m),S(n))) & (LT(S(m),S(n)) <-> LE(S(m),n))"},
      {"viii",
       "LE(n,n) & (LE(m,n) | LE(n,m)) & (LE(m,n) & LE(n,r) -> LE(m,r)) & (LE(m,n) & LE(n,m) -> m=n) & LE(0,n)"},
      {"ix",
       "~LT(n,n) & (LT(m,n) & LT(n,r) -> LT(m,r)) & (LT(m,n) | m=n | LT(n,m)) & (~(n=0) -> LT(0,n)) & "
       "LT(n,S(n)) & ~(LT(n,r) & LT(r,S(n))) & (~(n=0) -> LT(pred(n),n) & ~(LT(pred(n),r) & LT(r,n)))"},
      {"x", "LE(plus(n,m),plus(n,r)) <-> LE(m,r)"},
      {"xi", "LT(plus(n,m),plus(n,r)) <-> LT(m,r)"},
  };
  for (const auto& [item, text] : items) s.claims.push_back(formula_claim(std::string("L11.") + item, text, B));

  // seeded combinations of inequalities against their compiled equations
  s.claims.push_back({"L11.iii", [B](const Context& c) {
                        auto gen = rng(c.options().seed, "L11.iii");
                        const model::Env env = pra_env(c);
                        for (int trial = 0; trial < 20; ++trial) {
                          const std::string text = random_order_formula(gen, 2);
                          const syntax::Formula phi = parse_claim(text, env);
                          const syntax::Term tau = tactics::compile_term(phi);
                          const std::string equiv =
                              "(" + syntax::print(phi) + ") <-> " + syntax::print(tau) + "=0";
                          ClaimResult r = check_formula(equiv, env, B);
                          if (r.status == Status::Fail) {
                            r.reason = "compiled form differs: " + text;
                            return r;
                          }
                        }
                        return pass();
                      }});
  return s;
}

}  // namespace etf::harness::detail
