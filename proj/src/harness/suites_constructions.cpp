// MAX, PAIR, QUOT, PERM and MIN: the constructions over the pra arithmetic
// and the implications between the minimization principles.

#include <set>

#include "etf/model/arith.hpp"
#include "etf/model/builtins.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/constructions.hpp"
#include "etf/model/search.hpp"
#include "etf/model/theorem2.hpp"
#include "suite.hpp"

namespace etf::harness::detail {

namespace {

using model::FuncValue;
using model::Realization;
using U = std::uint64_t;

FuncValue host1(std::string name, std::function<U(U)> f) {
  return model::native(1, std::move(name), [f](const Nat* a) { return Nat(f(a[0].to_u64())); });
}
FuncValue host2(std::string name, std::function<U(U, U)> f) {
  return model::native(2, std::move(name), [f](const Nat* a) { return Nat(f(a[0].to_u64(), a[1].to_u64())); });
}
FuncValue host3(std::string name, std::function<U(U, U, U)> f) {
  return model::native(3, std::move(name),
                       [f](const Nat* a) { return Nat(f(a[0].to_u64(), a[1].to_u64(), a[2].to_u64())); });
}

U tri(U n) { return n * (n + 1) / 2; }
U cantor(U n, U m) { return tri(n + m) + m; }
U cantor_p1(U k) {
  U s = 0;
  while (tri(s + 1) <= k) ++s;
  return s - (k - tri(s));
}
U cantor_p2(U k) {
  U s = 0;
  while (tri(s + 1) <= k) ++s;
  return k - tri(s);
}

// Host least zero of the last argument.
U host_mu2(const std::function<U(U, U)>& f, U m) {
  for (U n = 0;; ++n)
    if (f(m, n) == 0) return n;
}

model::Env native_env() {
  model::Env env = model::arith_env(model::arith_oracle());
  env.set("t", model::builtin("t"));
  return env;
}

ClaimResult expect_value(const Nat& got, U want, Assignment where, const std::string& what) {
  if (got == Nat(want)) return pass();
  return fail(std::move(where), what + ": " + got.str() + " but expected " + std::to_string(want));
}

// Unary families with f(0)=0 and ternary families ignoring their second
// argument with g(m,n,0)=0, both as terms over m (and m, r).
const std::vector<std::string> kMaxF = {"m", "t(m)", "times(m,S(S(0)))", "times(odd(m),m)", "monus(m,S(S(0)))"};
const std::vector<std::string> kMaxG = {"sg(monus(r,m))", "0", "odd(r)", "times(r,sgbar(odd(r)))",
                                        "sg(monus(t(r),m))"};

}  // namespace

SuiteDef suite_max(const Options& opt) {
  const U B = main_bound(opt, 25), L = std::min<U>(B, 12);
  SuiteDef s;
  s.bounds = {{"fast", B}, {"literal", L}};
  s.claims.push_back({"L12.i", [B, L](const Context& c) {
                        const FuncValue host = host2("max", [](U a, U b) { return std::max(a, b); });
                        const FuncValue f = model::const_fn(Nat(0)), g = model::lift1(model::const_fn(Nat(0)));
                        return first_failure({
                            [&] { return agree(c.fn("max2", model::max_suite(f, g, Realization::Fast).max2), host, B, "max (fast)"); },
                            [&] {
                              return agree(c.fn("max2", model::max_suite(f, g, Realization::Literal).max2), host, L, "max (literal)");
                            },
                        });
                      }});
  for (const bool argmax : {false, true}) {
    const std::string label = argmax ? "L12.iii" : "L12.ii";
    s.claims.push_back({label, [B, L, argmax](const Context& c) {
                          const model::Env env = c.env(native_env());
                          for (const auto& ft : kMaxF)
                            for (const auto& gt : kMaxG) {
                              const FuncValue f = model::fix_nr(model::term_fn(ft, env), Nat(0), Nat(0));
                              const FuncValue g = model::term_fn(gt, env);
                              for (const auto re : {Realization::Fast, Realization::Literal}) {
                                const auto suite = model::max_suite(f, g, re);
                                const std::string what = std::string(argmax ? "argmax" : "fmax") + " (" +
                                                         model::to_string(re) + ") f=" + ft + ", g=" + gt;
                                ClaimResult r = argmax ? agree(c.fn("argmax", suite.argmax), suite.argmax_oracle,
                                                               re == Realization::Fast ? B : L, what)
                                                       : agree(c.fn("fmax", suite.fmax), suite.fmax_oracle,
                                                               re == Realization::Fast ? B : L, what);
                                if (r.status == Status::Fail) return r;
                              }
                            }
                          return pass();
                        }});
  }
  return s;
}

SuiteDef suite_pair(const Options& opt) {
  const U B = main_bound(opt, 60);
  const U unique_to = tri(30), onto = tri(120);
  const U L = std::min<U>(B, 12);
  SuiteDef s;
  s.bounds = {{"n", B}, {"unique", unique_to}, {"surjective", onto}, {"literal", L}};

  // pairing functions by name, over the host order
  auto env_for = [](const Context& c) {
    const model::Pairing& p = model::pairing(Realization::Fast);
    model::Env env = model::arith_env(model::arith_oracle());
    env.set("t", p.t).set("tprime", p.tprime).set("pair", p.pair).set("p1", p.p1).set("p2", p.p2);
    return c.env(env);
  };
  const model::Pairing oracle = model::pairing_oracle();

  s.claims.push_back({"L13.i", [=](const Context& c) {
                        const model::Env env = env_for(c);
                        return first_failure({
                            [&] { return check_formula("t(0)=0 & t(S(n))=plus(plus(t(n),n),S(0))", env, B); },
                            [&] { return agree(env.functions.at("t"), oracle.t, B, "t against n(n+1)/2"); },
                            [&] {
                              return agree(model::pairing(Realization::Literal).t, oracle.t, L, "t (literal)");
                            },
                        });
                      }});
  s.claims.push_back({"L13.ii", [=](const Context& c) {
                        return check_formula("LT(m,n) -> LT(t(m),t(n))", env_for(c), B);
                      }});
  s.claims.push_back({"L13.iii", [=](const Context& c) {
                        return check_formula("t(0)=0 & t(S(0))=S(0) & (LE(S(S(0)),n) -> LT(n,t(n)))", env_for(c), B);
                      }});
  s.claims.push_back({"L13.iv", [=](const Context& c) {
                        const model::Env env = env_for(c);
                        return first_failure({
                            [&] { return check_formula("LE(t(tprime(n)),n) & LT(n,t(S(tprime(n))))", env, B); },
                            [&] { return agree(env.functions.at("tprime"), oracle.tprime, B, "t' against max{r : t(r)<=n}"); },
                            [&] {
                              return agree(model::pairing(Realization::Literal).tprime, oracle.tprime, L,
                                           "t' (literal)");
                            },
                        });
                      }});
  s.claims.push_back({"L13.v", [=](const Context& c) {
                        const model::Env env = env_for(c);
                        ClaimResult r = check_formula(
                            "LE(monus(n,t(tprime(n))),tprime(n)) & n=plus(t(tprime(n)),monus(n,t(tprime(n))))", env,
                            B);
                        if (r.status == Status::Fail) return r;
                        // exactly one (m,r) with n=t(m)+r and r<=m, by enumeration
                        const FuncValue t = env.functions.at("t");
                        for (U n = 0; n <= unique_to; ++n) {
                          int count = 0;
                          for (U m = 0; m <= n; ++m) {
                            const Nat tm = t(Nat(m));
                            if (tm > Nat(n)) break;
                            const U rest = n - tm.to_u64();
                            if (rest <= m) ++count;
                          }
                          if (count != 1)
                            return fail({{"n", num(n)}},
                                        std::to_string(count) + " decompositions n=t(m)+r with r<=m");
                        }
                        return pass();
                      }});
  s.claims.push_back({"L13.vi", [=](const Context& c) {
                        const model::Env env = env_for(c);
                        const model::Pairing& lit = model::pairing(Realization::Literal);
                        return first_failure({
                            [&] { return check_formula("p1(pair(n,m))=n & p2(pair(n,m))=m", env, B); },
                            [&] { return check_formula("pair(p1(k),p2(k))=k", env, onto); },
                            [&] { return agree(env.functions.at("pair"), oracle.pair, B, "pair against t(n+m)+m"); },
                            [&] { return agree(env.functions.at("p1"), oracle.p1, B, "p1 against closed form"); },
                            [&] { return agree(env.functions.at("p2"), oracle.p2, B, "p2 against closed form"); },
                            [&] { return agree(lit.pair, oracle.pair, L, "pair (literal)"); },
                            [&] { return agree(lit.p1, oracle.p1, L, "p1 (literal)"); },
                            [&] { return agree(lit.p2, oracle.p2, L, "p2 (literal)"); },
                        });
                      }});
  return s;
}

SuiteDef suite_quot(const Options& opt) {
  const U B = main_bound(opt, 200);
  SuiteDef s;
  s.bounds = {{"n", B}};
  auto env_for = [](const Context& c) {
    model::Env env = model::arith_env(model::arith(model::Basis::Pra));
    env.set("q", model::quotient_fn(Realization::Literal));
    return c.env(env);
  };
  s.claims.push_back({"L15.i", [=](const Context& c) {
                        const model::Env env = env_for(c);
                        return first_failure({
                            [&] { return check_formula("q(0)=0 & q(S(n))=plus(q(n),sgbar(odd(S(n))))", env, B); },
                            [&] {
                              return agree(env.functions.at("q"), host1("half", [](U n) { return n / 2; }), B,
                                           "q against floor(n/2)");
                            },
                        });
                      }});
  s.claims.push_back({"L15.ii", [=](const Context& c) {
                        return check_formula("odd(S(times(S(S(0)),n)))=S(0)", env_for(c), B);
                      }});
  s.claims.push_back({"L15.iii", [=](const Context& c) {
                        return check_formula("q(times(S(S(0)),n))=n", env_for(c), B);
                      }});
  return s;
}

namespace {

struct PermFamily {
  std::string name;
  FuncValue chiA, h;
};

// A = {a, a+2d, a+4d, ...} with h enumerating the odd numbers along A, and a
// random odd set of density about 2/3 with h counting the members below.
std::vector<PermFamily> perm_families(std::uint64_t seed) {
  auto gen = rng(seed, "PERM");
  std::vector<PermFamily> out;
  const U a = 2 * (gen() % 3) + 1, d = gen() % 3 + 1;
  out.push_back({"progression a=" + std::to_string(a) + " step " + std::to_string(2 * d),
                 host1("chiA", [a, d](U k) -> U { return k >= a && (k - a) % (2 * d) == 0; }),
                 host1("h", [a, d](U k) -> U { return k >= a && (k - a) % (2 * d) == 0 ? 2 * ((k - a) / (2 * d)) + 1 : 0; })});
  const U salt = gen();
  auto member = [salt](U k) -> bool {
    if (k % 2 == 0) return false;
    std::uint64_t x = (k + salt) * 0x9E3779B97F4A7C15ull;
    x ^= x >> 31;
    return x % 3 != 0;
  };
  out.push_back({"random odd set", host1("chiA", [member](U k) -> U { return member(k); }),
                 host1("h", [member](U k) -> U {
                   if (!member(k)) return 0;
                   U below = 0;
                   for (U j = 1; j < k; j += 2) below += member(j);
                   return 2 * below + 1;
                 })});
  return out;
}

}  // namespace

SuiteDef suite_perm(const Options& opt) {
  const U E = main_bound(opt, 60), G = 99, V = 40;
  SuiteDef s;
  s.bounds = {{"enumeration", E}, {"injective", G}, {"onto", V}};

  s.claims.push_back({"L14.i", [=](const Context& c) {
                        for (const auto& fam : perm_families(c.options().seed)) {
                          const auto ext = model::perm_extend(c.fn("chiA", fam.chiA), c.fn("h", fam.h), Realization::Fast);
                          const FuncValue f = c.fn("enum_f", ext.enum_f);
                          for (U n = 0; n <= E; ++n) {
                            const Nat fn = f(Nat(n));
                            const Assignment at = {{"family", fam.name}, {"n", num(n)}};
                            if (fn < Nat(n)) return fail(at, "f(n) < n");
                            if (n < E && !(fn < f(Nat(n + 1)))) return fail(at, "f not increasing at n");
                            if (!fam.chiA(fn).is_zero()) return fail(at, "f(n) lies in A");
                          }
                          // every element of the complement up to E is enumerated
                          for (U k = 0; k <= E; ++k) {
                            if (!fam.chiA(Nat(k)).is_zero()) continue;
                            bool hit = false;
                            for (U n = 0; n <= k && !hit; ++n) hit = f(Nat(n)) == Nat(k);
                            if (!hit) return fail({{"family", fam.name}, {"k", num(k)}}, "k outside A is missed by f");
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"L14.ii", [=](const Context& c) {
                        for (const auto& fam : perm_families(c.options().seed)) {
                          const auto ext = model::perm_extend(c.fn("chiA", fam.chiA), c.fn("h", fam.h), Realization::Fast);
                          const FuncValue inv = c.fn("inv_fprime", ext.inv_fprime);
                          for (U n = 0; n <= G; ++n) {
                            if (!fam.chiA(Nat(n)).is_zero()) continue;
                            const Nat got = ext.enum_f(inv(Nat(n)));
                            if (got != Nat(n))
                              return fail({{"family", fam.name}, {"n", num(n)}}, "f(f'(n)) = " + got.str());
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"L14.iii", [=](const Context& c) {
                        for (const auto& fam : perm_families(c.options().seed)) {
                          const auto ext = model::perm_extend(c.fn("chiA", fam.chiA), c.fn("h", fam.h), Realization::Fast);
                          const FuncValue g = c.fn("g", ext.g);
                          std::map<Nat, U> seen;
                          for (U n = 0; n <= G; ++n) {
                            const Nat v = g(Nat(n));
                            const Assignment at = {{"family", fam.name}, {"n", num(n)}};
                            if (!fam.chiA(Nat(n)).is_zero() && v != fam.h(Nat(n))) return fail(at, "g differs from h on A");
                            auto [it, fresh] = seen.emplace(v, n);
                            if (!fresh)
                              return fail(at, "g(n) = g(" + std::to_string(it->second) + ") = " + v.str());
                          }
                          for (U v = 0; v <= V; ++v) {
                            try {
                              model::invert_function(g, Nat(v), 10'000);
                            } catch (const model::FuelExhausted&) {
                              return fail({{"family", fam.name}, {"value", num(v)}}, "value not attained within fuel");
                            }
                          }
                        }
                        return pass();
                      }});
  return s;
}

SuiteDef suite_min(const Options& opt) {
  const U M = main_bound(opt, 30), P = std::min<U>(M, 12);
  SuiteDef s;
  s.bounds = {{"m", M}, {"pairs", P}};

  using F2 = std::function<U(U, U)>;
  struct Family {
    std::string name;
    F2 f;
  };
  // binary functions with a zero in every row
  const std::vector<Family> rows = {
      {"zeros from m on", [](U m, U n) -> U { return n >= m ? 0 : m - n; }},
      {"first n above m", [](U m, U n) -> U { return m < n ? 0 : 1; }},
      {"n*n >= m", [](U m, U n) -> U { return n * n >= m ? 0 : 1; }},
      {"odd n >= m mod 4", [](U m, U n) -> U { return n % 2 == 1 && n >= m % 4 ? 0 : 2; }},
  };
  // unique-witness families
  auto witness_families = [](const Context& c) {
    auto gen = rng(c.options().seed, "MIN");
    const U k = gen() % 5 + 1;
    std::vector<std::pair<std::string, std::function<U(U)>>> out = {
        {"m mod 5 + 1", [](U m) { return m % 5 + 1; }},
        {"p1(m) + 2 p2(m)", [](U m) { return cantor_p1(m) + 2 * cantor_p2(m); }},
        {"constant " + std::to_string(k), [k](U) { return k; }},
    };
    return out;
  };
  auto unique = [](const std::function<U(U)>& w) {
    return host2("unique", [w](U m, U n) -> U { return n == w(m) ? 0 : 1; });
  };

  s.claims.push_back({"T2.1to2", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        for (const auto& fam : rows) {
                          const FuncValue g = c.fn("g", pl.p_1to2(host2(fam.name, fam.f)));
                          for (U m = 0; m <= M; ++m) {
                            ClaimResult r = expect_value(g(Nat(m)), host_mu2(fam.f, m), {{"family", fam.name}, {"m", num(m)}},
                                                         "least zero");
                            if (r.status == Status::Fail) return r;
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"T2.2to3", [=](const Context& c) {
                        for (const auto& [name, w] : witness_families(c)) {
                          const FuncValue f = unique(w);
                          const FuncValue g = c.fn("g", model::mu_fn(f, c.fuel()));
                          for (U m = 0; m <= M; ++m) {
                            if (!f(Nat(m), g(Nat(m))).is_zero())
                              return fail({{"family", name}, {"m", num(m)}}, "f(m,g(m)) != 0");
                            ClaimResult r = expect_value(g(Nat(m)), w(m), {{"family", name}, {"m", num(m)}}, "witness");
                            if (r.status == Status::Fail) return r;
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"T2.3to4", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        const std::vector<std::pair<std::string, std::function<U(U)>>> bijections = {
                            {"identity", [](U n) { return n; }},
                            {"swap neighbours", [](U n) { return n ^ 1; }},
                            {"pair(p2,p1)", [](U n) { return cantor(cantor_p2(n), cantor_p1(n)); }},
                            {"rotate blocks of 3", [](U n) { return n - n % 3 + (n % 3 + 1) % 3; }},
                        };
                        for (const auto& [name, b] : bijections) {
                          const FuncValue f = host1(name, b);
                          const FuncValue g = c.fn("g", pl.p_3to4(f));
                          for (U n = 0; n <= M; ++n) {
                            const Nat v = f(g(Nat(n)));
                            if (v != Nat(n)) return fail({{"family", name}, {"n", num(n)}}, "f(g(n)) = " + v.str());
                            U inverse = 0;
                            while (b(inverse) != n) ++inverse;
                            ClaimResult r = expect_value(g(Nat(n)), inverse, {{"family", name}, {"n", num(n)}}, "inverse");
                            if (r.status == Status::Fail) return r;
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"T2.4to3", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        for (const auto& [name, w] : witness_families(c)) {
                          const FuncValue g = c.fn("g", pl.p_4to3(unique(w)));
                          for (U m = 0; m <= M; ++m) {
                            ClaimResult r = expect_value(g(Nat(m)), w(m), {{"family", name}, {"m", num(m)}},
                                                         "recovered witness");
                            if (r.status == Status::Fail) return r;
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"T2.3to2", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        for (const auto& fam : rows) {
                          const FuncValue g = c.fn("g", pl.p_3to2(host2(fam.name, fam.f)));
                          for (U m = 0; m <= M; ++m) {
                            ClaimResult r = expect_value(g(Nat(m)), host_mu2(fam.f, m), {{"family", fam.name}, {"m", num(m)}},
                                                         "least zero");
                            if (r.status == Status::Fail) return r;
                          }
                        }
                        return pass();
                      }});
  s.claims.push_back({"T2.2to1", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        using F3 = std::function<U(U, U, U)>;
                        const std::vector<std::pair<std::string, F3>> fams = {
                            {"r >= m+n", [](U m, U n, U r) -> U { return r >= m + n ? 0 : 1; }},
                            {"r*r >= m*n", [](U m, U n, U r) -> U { return r * r >= m * n ? 0 : 1; }},
                            {"r = m+n mod 3, r > 0", [](U m, U n, U r) -> U { return r > 0 && r % 3 == (m + n) % 3 ? 0 : 1; }},
                        };
                        for (const auto& [name, f] : fams) {
                          const FuncValue g = c.fn("g", pl.p_2to1(host3(name, f)));
                          for (U m = 0; m <= P; ++m)
                            for (U n = 0; n <= P; ++n) {
                              U want = 0;
                              while (f(m, n, want) != 0) ++want;
                              ClaimResult r = expect_value(g(Nat(m), Nat(n)), want,
                                                           {{"family", name}, {"m", num(m)}, {"n", num(n)}}, "least zero");
                              if (r.status == Status::Fail) return r;
                            }
                        }
                        return pass();
                      }});
  // the least-zero function reached through each principle is the same
  s.claims.push_back({"C2", [=](const Context& c) {
                        const model::Pipelines pl{Realization::Fast, c.fuel()};
                        for (const auto& fam : rows) {
                          const FuncValue f = host2(fam.name, fam.f);
                          const FuncValue direct = model::mu_fn(f, c.fuel());
                          const FuncValue via3 = c.fn("g", pl.p_1to2(f)), via1 = pl.p_3to2(f);
                          const FuncValue via_pairs = model::fix_nr(
                              model::lift2(pl.p_2to1(model::compose(model::lift2(f), model::proj(0), model::proj(2), model::proj(1)))),
                              Nat(0), Nat(0));
                          for (U m = 0; m <= M; ++m) {
                            const Nat d = direct(Nat(m));
                            const Assignment at = {{"family", fam.name}, {"m", num(m)}};
                            if (via3(Nat(m)) != d) return fail(at, "MIN3 route differs from direct search");
                            if (via1(Nat(m)) != d) return fail(at, "MIN1 route differs from direct search");
                            if (via_pairs(Nat(m)) != d) return fail(at, "paired route differs from direct search");
                          }
                        }
                        return pass();
                      }});
  return s;
}

}  // namespace etf::harness::detail
