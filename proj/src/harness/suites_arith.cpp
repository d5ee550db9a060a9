// T1, REC and ITER: the arithmetic of the weakened recursion scheme, the
// recursion schemes themselves and definition by cases.

#include "etf/model/arith.hpp"
#include "etf/model/builtins.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"
#include "etf/tactics.hpp"
#include "suite.hpp"

namespace etf::harness::detail {

namespace {

using model::FuncValue;

Claim formula_claim(std::string label, std::string text, std::uint64_t B, model::Basis basis) {
  return {std::move(label), [text = std::move(text), B, basis](const Context& c) {
            return check_formula(text, c.env(model::arith_env(model::arith(basis))), B);
          }};
}

// Unary function n -> value of a term over m.
FuncValue unary(const std::string& text, const model::Env& env) {
  return model::fix_nr(model::term_fn(text, env), Nat(0), Nat(0));
}

// f(m,0)=g(m), f(m,S k)=h(m, k or S k, f(m,k)) by a host loop.
FuncValue host_rec(FuncValue g, FuncValue h, bool weak, std::string name) {
  return model::native(2, std::move(name), [g, h, weak](const Nat* a) {
    Nat v = g(a[0]);
    const std::uint64_t n = a[1].to_u64();
    for (std::uint64_t k = 0; k < n; ++k) v = h(a[0], Nat(weak ? k + 1 : k), v);
    return v;
  });
}

const std::vector<std::string> kBases = {"m", "S(m)", "0", "times(m,m)", "plus(m,S(S(0)))"};
const std::vector<std::string> kSteps = {"plus(r,m)",   "plus(r,S(n))", "times(S(S(0)),r)", "monus(r,n)",
                                         "plus(times(n,S(S(0))),odd(r))", "sg(r)", "plus(m,n)", "S(r)",
                                         "monus(plus(r,m),S(0))"};

}  // namespace

SuiteDef suite_t1(const Options& opt) {
  const std::uint64_t B = main_bound(opt, 25);
  const std::uint64_t small = std::min<std::uint64_t>(B, 8);
  const std::vector<std::pair<const char*, const char*>> items = {
      {"i", "plus(n,S(0))=S(n)"},
      {"ii", "plus(0,n)=n"},
      {"iii", "plus(S(n),m)=plus(n,S(m))"},
      {"iv", "plus(n,m)=plus(m,n)"},
      {"v", "plus(plus(n,m),r)=plus(n,plus(m,r))"},
      {"vi", "plus(n,m)=0 <-> n=0 & m=0"},
      {"vii", "times(0,n)=0"},
      {"viii", "times(S(n),m)=plus(times(n,m),m)"},
      {"ix", "times(m,n)=times(n,m)"},
      {"x", "times(S(0),n)=n"},
      {"xi", "times(m,n)=0 <-> n=0 | m=0"},
      {"xii", "plus(n,n)=times(S(S(0)),n)"},
      {"xiii", "sg(0)=0 & (~(n=0) -> sg(n)=S(0))"},
      {"xiv", "sgbar(0)=S(0) & (~(n=0) -> sgbar(n)=0)"},
      {"xv", "sgbar(times(n,S(n)))=sgbar(n)"},
      {"xvi", "odd(S(0))=S(0)"},
      {"xvii", "fprime(S(0))=S(0)"},
      {"xviii", "sgbar(fprime(0))=S(0) & (~(n=0) -> sgbar(fprime(n))=0)"},
      {"xix", "odd(times(S(S(0)),n))=0"},
      {"xx", "odd(S(S(n)))=odd(n)"},
      {"xxi", "odd(plus(m,times(S(S(0)),n)))=odd(m)"},
      {"xxii", "odd(plus(n,S(n)))=S(0)"},
      {"xxiii", "odd(times(n,S(n)))=0"},
      {"xxiv", "odd(fprime(S(0)))=S(0) & (~(n=S(0)) -> odd(fprime(n))=0)"},
      {"xxv", "pred(0)=0 & (~(n=0) -> S(pred(n))=n)"},
      {"xxvi", "pred(S(n))=n"},
  };
  // items xv to xxv reach f' or products of the bound; they use the small box
  const std::vector<std::string> small_items = {"xv",  "xvi", "xvii",  "xviii", "xix", "xx",
                                                "xxi", "xxii", "xxiii", "xxiv",  "xxv"};
  SuiteDef s;
  s.bounds = {{"n", B}, {"small", small}};
  for (const auto& [item, text] : items) {
    const bool is_small = std::find(small_items.begin(), small_items.end(), item) != small_items.end();
    s.claims.push_back(formula_claim(std::string("T1.") + item, text, is_small ? small : B, model::Basis::Wpra));
  }
  return s;
}

SuiteDef suite_rec(const Options& opt) {
  const std::uint64_t B = main_bound(opt, 25);
  const std::uint64_t small = std::min<std::uint64_t>(B, 8);
  const std::uint64_t C = std::min<std::uint64_t>(B, 12), D = std::min<std::uint64_t>(B, 10);
  SuiteDef s;
  s.bounds = {{"n", B}, {"small", small}, {"recursion", C}, {"cases", D}};

  struct Def {
    const char* item;
    const char* text;
    const char* fn;
    bool is_small;
  };
  const std::vector<Def> defs = {
      {"i", "plus(m,0)=m & plus(m,S(n))=S(plus(m,n))", "plus", false},
      {"ii", "times(m,0)=0 & times(m,S(n))=plus(times(m,n),m)", "times", false},
      {"iii", "sg(0)=0 & sg(S(n))=S(0)", "sg", false},
      {"iv", "sgbar(0)=S(0) & sgbar(S(n))=0", "sgbar", false},
      {"v", "odd(0)=0 & odd(S(n))=sgbar(odd(n))", "odd", false},
      {"vi", "fprime(0)=0 & fprime(S(n))=plus(sgbar(fprime(n)),times(fprime(n),S(fprime(n))))", "fprime", true},
      {"vii", "pred(0)=0 & pred(S(n))=times(sgbar(odd(fprime(S(n)))),S(pred(n)))", "pred", true},
      {"viii", "monus(m,0)=m & monus(m,S(n))=pred(monus(m,n))", "monus", false},
  };
  for (const auto& d : defs) {
    s.claims.push_back({std::string("L5.") + d.item, [d, B, small](const Context& c) {
                          const std::uint64_t box = d.is_small ? small : B;
                          const model::Env env = c.env(model::arith_env(model::arith(model::Basis::Wpra)));
                          return first_failure({
                              [&] { return check_formula(d.text, env, box); },
                              [&] {
                                const FuncValue oracle = model::arith_env(model::arith_oracle()).functions.at(d.fn);
                                return agree(env.functions.at(d.fn), oracle, box,
                                             std::string(d.fn) + " against host arithmetic");
                              },
                          });
                        }});
  }

  // pra and wpra from each other, against host recursion
  for (const bool from_wpra : {true, false}) {
    const std::string label = from_wpra ? "C1.i" : "C1.ii";
    s.claims.push_back({label, [from_wpra, C, label](const Context& c) {
                          auto gen = rng(c.options().seed, label);
                          const model::Env env = model::arith_env(model::arith_oracle());
                          const FuncValue pred = c.fn("pred", model::arith(model::Basis::Wpra).pred);
                          for (int trial = 0; trial < 10; ++trial) {
                            const std::string gt = kBases[gen() % kBases.size()];
                            const std::string ht = kSteps[gen() % kSteps.size()];
                            const FuncValue g = unary(gt, env), h = model::term_fn(ht, env);
                            const FuncValue got = from_wpra ? model::pra_from_wpra(g, h, pred)
                                                            : model::wpra_from_pra(g, h);
                            ClaimResult r = agree(got, host_rec(g, h, !from_wpra, "host"), C,
                                                  "g=" + gt + ", h=" + ht);
                            if (r.status == Status::Fail) return r;
                          }
                          return pass();
                        }});
  }

  // definition by cases against host if-then-else, arguments (n,m,r)
  s.claims.push_back({"L9", [D](const Context& c) {
                        struct Case {
                          const char *phi, *s, *t;
                          std::function<std::uint64_t(std::uint64_t, std::uint64_t, std::uint64_t)> host;
                        };
                        const std::vector<Case> cases = {
                            {"n=m", "r", "S(r)", [](auto n, auto m, auto r) { return n == m ? r : r + 1; }},
                            {"odd(n)=S(0) & ~(m=0)", "plus(n,m)", "0",
                             [](auto n, auto m, auto) -> std::uint64_t { return n % 2 == 1 && m != 0 ? n + m : 0; }},
                            {"lt(n,m)=S(0) | r=0", "m", "n", [](auto n, auto m, auto r) { return n < m || r == 0 ? m : n; }},
                            {"~(times(n,m)=r)", "S(S(0))", "times(r,r)",
                             [](auto n, auto m, auto r) -> std::uint64_t { return n * m != r ? 2 : r * r; }},
                            {"n=m -> m=r", "n", "plus(m,r)", [](auto n, auto m, auto r) { return n != m || m == r ? n : m + r; }},
                            {"sg(monus(n,m))=0 <-> ~(r=S(n))", "monus(m,n)", "pred(r)",
                             [](auto n, auto m, auto r) -> std::uint64_t {
                               return (n <= m) == (r != n + 1) ? (m > n ? m - n : 0) : (r ? r - 1 : 0);
                             }},
                        };
                        const model::Env env = c.env(model::arith_env(model::arith(model::Basis::Pra)));
                        const syntax::Context ctx = model::env_context(env);
                        syntax::Context full = ctx;
                        for (const char* v : {"n", "m", "r"}) full.declare(v, syntax::Sort::N);
                        for (const auto& k : cases) {
                          const auto def = tactics::conditional_def(syntax::parse_formula(k.phi, full),
                                                                    syntax::parse_term(k.s, full),
                                                                    syntax::parse_term(k.t, full), env);
                          const auto host = k.host;
                          const FuncValue want = model::native(3, "cases", [host](const Nat* a) {
                            return Nat(host(a[0].to_u64(), a[1].to_u64(), a[2].to_u64()));
                          });
                          ClaimResult r = agree(def.witness, want, D,
                                                std::string("if ") + k.phi + " then " + k.s + " else " + k.t,
                                                {"n", "m", "r"});
                          if (r.status == Status::Fail) return r;
                        }
                        return pass();
                      }});
  return s;
}

SuiteDef suite_iter(const Options& opt) {
  const std::uint64_t B = main_bound(opt, 20);
  SuiteDef s;
  s.bounds = {{"n", B}};
  s.claims.push_back({"ITER", [B](const Context& c) {
                        auto gen = rng(c.options().seed, "ITER");
                        const model::Env arith = c.env(model::arith_env(model::arith(model::Basis::Wpra)));
                        const std::vector<std::string> hs = {"S(m)",  "plus(m,S(S(0)))", "times(S(S(0)),m)",
                                                             "sgbar(m)", "odd(S(m))",     "pred(m)",
                                                             "plus(m,odd(m))"};
                        for (int trial = 0; trial < 8; ++trial) {
                          const std::uint64_t r0 = gen() % 6;
                          const std::string ht = hs[gen() % hs.size()];
                          const FuncValue h = unary(ht, arith);
                          const FuncValue f = model::iter(Nat(r0), h);
                          model::Env env = arith;
                          env.set("h", h).set("f", f).set("c", Nat(r0));
                          ClaimResult r = check_formula("f(0)=c & f(S(n))=h(f(n))", env, B);
                          if (r.status == Status::Fail) {
                            r.reason += " (h=" + ht + ", c=" + std::to_string(r0) + ")";
                            return r;
                          }
                          r = agree(model::iter_via_wpra(Nat(r0), h), f, B, "iteration through wpra, h=" + ht);
                          if (r.status == Status::Fail) return r;
                        }
                        return pass();
                      }});
  return s;
}

}  // namespace etf::harness::detail
