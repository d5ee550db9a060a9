#include "etf/model/constructions.hpp"

#include <mutex>
#include <set>

#include "etf/model/combinators.hpp"
#include "etf/model/recursion.hpp"
#include "memo.hpp"

namespace etf::model {

std::string to_string(Realization r) { return r == Realization::Literal ? "literal" : "fast"; }

namespace {

class TableNode final : public FnNode {
 public:
  TableNode(std::string name, Nat base, std::function<Nat(const Nat&, const Nat&)> step)
      : FnNode(1), name_(std::move(name)), step_(std::move(step)) {
    table_.push_back(std::move(base));
  }
  Nat eval(const Nat* a) const override {
    if (!a[0].fits_u64() || a[0].to_u64() > (std::uint64_t{1} << 26))
      throw RecursionTooDeep(name_ + ": argument " + a[0].str() + " too large");
    const std::size_t n = a[0].to_u64();
    std::lock_guard lock(mu_);
    while (table_.size() <= n) table_.push_back(step_(Nat(table_.size() - 1), table_.back()));
    return table_[n];
  }
  std::string describe() const override { return name_; }

 private:
  std::string name_;
  std::function<Nat(const Nat&, const Nat&)> step_;
  mutable std::mutex mu_;
  mutable std::vector<Nat> table_;
};

enum class Scan { Fmax, Argmax, ArgmaxLiteral, FmaxOracle, ArgmaxOracle };

// Host-loop evaluation of the max recursions and their enumeration oracles.
class ScanNode final : public FnNode {
 public:
  ScanNode(Scan kind, FuncValue f, FuncValue g) : FnNode(2), kind_(kind), f_(std::move(f)), g_(std::move(g)) {}

  Nat eval(const Nat* a) const override {
    detail::ArgsKey key{{a[0], a[1], Nat(0)}};
    if (auto v = memo_.get(key)) return *v;
    Nat v = compute(a[0], a[1]);
    memo_.put(key, v);
    return v;
  }

  std::string describe() const override {
    static const char* names[] = {"fmax", "argmax", "argmax_literal", "fmax_oracle", "argmax_oracle"};
    return std::string(names[static_cast<int>(kind_)]) + "(" + f_.describe() + ", " + g_.describe() + ")";
  }

 private:
  Nat compute(const Nat& m, const Nat& nn) const {
    if (!nn.fits_u64() || nn.to_u64() > (std::uint64_t{1} << 26))
      throw RecursionTooDeep(describe() + ": counter " + nn.str() + " too large");
    const std::uint64_t n = nn.to_u64();
    if (kind_ == Scan::FmaxOracle || kind_ == Scan::ArgmaxOracle) {
      Nat best(0);
      bool any = false;
      for (std::uint64_t r = 0; r <= n; ++r) {
        if (!g_(m, nn, Nat(r)).is_zero()) continue;
        Nat fr = f_(Nat(r));
        if (!any || fr > best) best = fr;
        any = true;
      }
      if (kind_ == Scan::FmaxOracle) return best;
      for (std::uint64_t r = n + 1; r-- > 0;)
        if (f_(Nat(r)) == best) return Nat(r);
      return Nat(0);
    }
    Nat fm(0), h(0);
    for (std::uint64_t i = 0; i < n; ++i) {
      const Nat s(i + 1);
      const Nat fs = f_(s);
      const Nat before = fm;
      if (g_(m, s, s).is_zero() && fs > fm) fm = fs;
      if (kind_ == Scan::Argmax && fs == fm) h = s;
      if (kind_ == Scan::ArgmaxLiteral && fs == before) h = s;
    }
    return kind_ == Scan::Fmax ? fm : h;
  }

  Scan kind_;
  FuncValue f_, g_;
  mutable detail::ValueMemo memo_;
};

FuncValue scan(Scan k, const FuncValue& f, const FuncValue& g) { return make_fn<ScanNode>(k, f, g); }

Env literal_env() { return arith_env(arith(Basis::Pra)); }

FuncValue unary_term(std::string_view text, const Env& env) { return fix_nr(term_fn(text, env), Nat(0), Nat(0)); }
FuncValue binary_term(std::string_view text, const Env& env) { return fix_r(term_fn(text, env), Nat(0)); }

bool is_one(const Nat& v) { return v == Nat(1); }

}  // namespace

FuncValue table_rec(std::string name, Nat base, std::function<Nat(const Nat&, const Nat&)> step) {
  return make_fn<TableNode>(std::move(name), std::move(base), std::move(step));
}

MaxSuite max_suite(FuncValue f, FuncValue g, Realization re, std::uint64_t sample) {
  if (f.arity() != 1 || g.arity() != 3) throw std::invalid_argument("max_suite: f unary and g ternary expected");
  for (std::uint64_t m = 0; m <= sample; ++m)
    for (std::uint64_t n = 0; n <= sample; ++n)
      if (!g(Nat(m), Nat(n), Nat(0)).is_zero())
        throw PreconditionFailed("max_suite: g(" + std::to_string(m) + "," + std::to_string(n) + ",0) is not 0");
  MaxSuite s;
  s.fmax_oracle = scan(Scan::FmaxOracle, f, g);
  s.argmax_oracle = scan(Scan::ArgmaxOracle, f, g);
  if (re == Realization::Fast) {
    s.max2 = native(2, "max", [](const Nat* x) { return x[0] < x[1] ? x[1] : x[0]; }, {}, 0b11);
    s.fmax = scan(Scan::Fmax, f, g);
    s.argmax = scan(Scan::Argmax, f, g);
    s.argmax_literal = scan(Scan::ArgmaxLiteral, f, g);
    return s;
  }
  Env env = literal_env();
  env.set("f", f).set("g", g);
  s.max2 = fix_r(conditional_fn("lt(m,n)=S(0) | m=n", "n", "m", env), Nat(0));
  env.set("max2", s.max2);
  s.fmax = pra(const_fn(Nat(0)), conditional_fn("g(m,S(n),S(n))=0", "max2(r,f(S(n)))", "r", env));
  env.set("fmax", s.fmax);
  s.argmax = pra(const_fn(Nat(0)), conditional_fn("f(S(n))=fmax(m,S(n))", "S(n)", "r", env));
  s.argmax_literal = pra(const_fn(Nat(0)), conditional_fn("f(S(n))=fmax(m,n)", "S(n)", "r", env));
  return s;
}

Pairing pairing_suite(Realization re) {
  Pairing p;
  Env env;
  if (re == Realization::Fast) {
    env = arith_env(arith_oracle());
    p.t = table_rec("t", Nat(0), [](const Nat& n, const Nat& prev) { return prev + n + Nat(1); });
    FuncValue t = p.t;
    p.g = native(3, "g_t", [t](const Nat* x) { return t(x[2]) <= x[0] ? Nat(0) : Nat(1); }, {}, 0b101);
  } else {
    env = literal_env();
    p.t = unary_rec(Basis::Pra, Nat(0), "plus(plus(r,n),S(0))", env);
    env.set("t", p.t);
    p.g = conditional_fn("lt(t(r),m)=S(0) | t(r)=m", "0", "S(0)", env);
  }
  MaxSuite ms = max_suite(p.t, p.g, re);
  p.tmax = diagonal(ms.fmax);
  p.tprime = memoized(diagonal(ms.argmax));
  env.set("t", p.t).set("tp", p.tprime);
  p.pair = binary_term("plus(t(plus(m,n)),n)", env);
  p.p2 = unary_term("monus(m,t(tp(m)))", env);
  env.set("p2", p.p2);
  p.p1 = unary_term("monus(tp(m),p2(m))", env);
  return p;
}

const Pairing& pairing(Realization re) {
  static const Pairing lit = pairing_suite(Realization::Literal);
  static const Pairing fast = pairing_suite(Realization::Fast);
  return re == Realization::Literal ? lit : fast;
}

Pairing pairing_oracle() {
  Pairing p;
  auto tri = [](const Nat& n) { return n * n.succ() / Nat(2); };
  // largest r with t(r) <= n
  auto inv = [](const Nat& n) {
    mpz_class d = 8 * n.to_mpz() + 1, s;
    mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
    return Nat(mpz_class((s - 1) / 2));
  };
  p.t = native(1, "t_oracle", [tri](const Nat* x) { return tri(x[0]); }, {}, 0b1);
  p.g = native(3, "g_t_oracle", [tri](const Nat* x) { return tri(x[2]) <= x[0] ? Nat(0) : Nat(1); }, {}, 0b101);
  p.tmax = native(1, "tmax_oracle", [tri, inv](const Nat* x) { return tri(inv(x[0])); }, {}, 0b1);
  p.tprime = native(1, "tprime_oracle", [inv](const Nat* x) { return inv(x[0]); }, {}, 0b1);
  p.pair = native(2, "pair_oracle", [tri](const Nat* x) { return tri(x[0] + x[1]) + x[1]; }, {}, 0b11);
  p.p2 = native(1, "p2_oracle", [tri, inv](const Nat* x) { return monus(x[0], tri(inv(x[0]))); }, {}, 0b1);
  p.p1 = native(1, "p1_oracle", [tri, inv](const Nat* x) {
    Nat w = inv(x[0]);
    return monus(w, monus(x[0], tri(w)));
  }, {}, 0b1);
  return p;
}

FuncValue quotient_fn(Realization re) {
  if (re == Realization::Fast)
    return table_rec("q", Nat(0), [](const Nat& n, const Nat& prev) { return prev + Nat(n.succ().is_odd() ? 0 : 1); });
  return unary_rec(Basis::Pra, Nat(0), "plus(r,sgbar(odd(S(n))))", literal_env());
}

PermExtension perm_extend(FuncValue chiA, FuncValue h, Realization re, std::uint64_t sample) {
  if (chiA.arity() != 1 || h.arity() != 1) throw std::invalid_argument("perm_extend: unary functions expected");
  std::set<Nat> seen;
  for (std::uint64_t n = 0; n <= sample; ++n) {
    const Nat c = chiA(Nat(n));
    const std::string at = " at " + std::to_string(n);
    if (!c.is_zero() && !is_one(c)) throw PreconditionFailed("perm_extend: characteristic function not 0/1" + at);
    if (c.is_zero()) continue;
    if (n % 2 == 0) throw PreconditionFailed("perm_extend: A contains an even number" + at);
    const Nat v = h(Nat(n));
    if (!v.is_odd()) throw PreconditionFailed("perm_extend: h is not odd on A" + at);
    if (!seen.insert(v).second) throw PreconditionFailed("perm_extend: h is not injective on A" + at);
  }
  PermExtension p;
  if (re == Realization::Fast) {
    FuncValue chi = chiA;
    auto step = [chi](const Nat& n) { return n.is_odd() || chi(n.succ()).is_zero() ? n.succ() : n.succ().succ(); };
    p.step = native(1, "perm_step", [step](const Nat* x) { return step(x[0]); }, {}, 0b1);
    p.enum_f = table_rec("enum_f", Nat(0), [step](const Nat&, const Nat& prev) { return step(prev); });
    FuncValue e = p.enum_f;
    FuncValue ge = native(3, "g_enum", [e](const Nat* x) { return e(x[2]) <= x[0] ? Nat(0) : Nat(1); }, {}, 0b101);
    p.inv_fprime = memoized(diagonal(max_suite(p.enum_f, ge, re).argmax));
    FuncValue inv = p.inv_fprime;
    p.g = memoized(native(1, "perm_g", [chi, h, inv](const Nat* x) {
      return chi(x[0]).is_zero() ? Nat(2) * inv(x[0]) : h(x[0]);
    }, {}, 0b1));
    return p;
  }
  Env env = literal_env();
  env.set("chi", chiA).set("h", h);
  p.step = unary_term(conditional_term("odd(m)=S(0) | chi(S(m))=0", "S(m)", "S(S(m))", env), env);
  p.enum_f = iter(Nat(0), p.step);
  env.set("e", p.enum_f);
  FuncValue ge = conditional_fn("lt(e(r),m)=S(0) | e(r)=m", "0", "S(0)", env);
  p.inv_fprime = diagonal(max_suite(p.enum_f, ge, re).argmax);
  env.set("invf", p.inv_fprime);
  p.g = unary_term(conditional_term("chi(m)=0", "times(S(S(0)),invf(m))", "h(m)", env), env);
  return p;
}

}  // namespace etf::model
