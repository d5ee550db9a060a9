#include "etf/model/recursion.hpp"

#include <unordered_map>

#include "etf/model/combinators.hpp"
#include "memo.hpp"

namespace etf::model {

namespace {

// Counters above this are summarized when the step allows it.
constexpr std::uint64_t kSummaryFrom = 64;
// Longest recursion iterated step by step.
constexpr std::uint64_t kDirectLimit = std::uint64_t{1} << 24;
// Steps spent looking for a cycle of a counter-independent step.
constexpr std::uint64_t kCycleProbe = std::uint64_t{1} << 16;

enum class Mode { Pra, Wpra, Iter };

class RecNode final : public FnNode {
 public:
  RecNode(Mode mode, FuncValue g, FuncValue h, Nat base)
      : FnNode(mode == Mode::Iter ? 1 : 2), mode_(mode), g_(std::move(g)), h_(std::move(h)), base_(std::move(base)) {}

  Nat eval(const Nat* args) const override {
    const Nat m = mode_ == Mode::Iter ? Nat(0) : args[0];
    const Nat& n = args[arity() - 1];
    if (n.fits_u64() && n.to_u64() <= kSummaryFrom) return direct(m, n.to_u64());
    if (n.fits_u64()) {
      if (auto hit = memo_.lookup(m, n.to_u64()).hit) return *hit;
    }
    if (auto s = summary(Affine::constant(m), n)) return s->a;
    if (!uses_counter() && (!n.fits_u64() || n.to_u64() > kCycleProbe)) {
      if (auto c = cycle(m, n)) return *c;
    }
    if (!n.fits_u64() || n.to_u64() > kDirectLimit)
      throw RecursionTooDeep(describe() + ": counter " + n.str() + " too large to iterate");
    return direct(m, n.to_u64());
  }

  std::optional<Affine> eval_sym(const Affine* args) const override {
    const Affine& n = args[arity() - 1];
    if (!n.concrete()) return std::nullopt;
    const Affine m = mode_ == Mode::Iter ? Affine::constant(Nat(0)) : args[0];
    if (m.concrete()) {
      std::array<Nat, 2> v{m.a, n.a};
      return Affine::constant(eval(mode_ == Mode::Iter ? &v[1] : v.data()));
    }
    if (n.a.fits_u64() && n.a.to_u64() <= kSummaryFrom) {
      auto r = g_.node().eval_sym(&m);
      for (std::uint64_t i = 0; r && i < n.a.to_u64(); ++i) r = step_sym(m, Nat(i), *r);
      return r;
    }
    return summary(m, n.a);
  }

  bool depends_on(int i) const override {
    if (mode_ == Mode::Iter) return true;
    if (i == 1) return true;
    return g_.depends_on(0) || h_.depends_on(0);
  }

  std::string describe() const override {
    switch (mode_) {
      case Mode::Pra: return "pra(" + g_.describe() + ", " + h_.describe() + ")";
      case Mode::Wpra: return "wpra(" + g_.describe() + ", " + h_.describe() + ")";
      case Mode::Iter: return "iter(" + base_.str() + ", " + h_.describe() + ")";
    }
    return "rec";
  }

 private:
  bool uses_counter() const { return mode_ != Mode::Iter && h_.depends_on(1); }
  bool uses_param() const { return mode_ != Mode::Iter && h_.depends_on(0); }

  Nat base(const Nat& m) const { return mode_ == Mode::Iter ? base_ : g_(m); }

  // value at i+1 from value r at i
  Nat step(const Nat& m, const Nat& i, const Nat& r) const {
    switch (mode_) {
      case Mode::Pra: return h_(m, i, r);
      case Mode::Wpra: return h_(m, i.succ(), r);
      case Mode::Iter: return h_(r);
    }
    return r;
  }

  std::optional<Affine> step_sym(const Affine& m, const Nat& i, const Affine& r) const {
    switch (mode_) {
      case Mode::Iter: return h_.node().eval_sym(&r);
      case Mode::Pra:
      case Mode::Wpra: {
        std::array<Affine, 3> v{m, Affine::constant(mode_ == Mode::Pra ? i : i.succ()), r};
        return h_.node().eval_sym(v.data());
      }
    }
    return std::nullopt;
  }

  // n-fold application of a step of the form r -> c + d*r, d in {0,1}.
  std::optional<Affine> summary(const Affine& m, const Nat& n) const {
    if (uses_counter() || (!m.concrete() && uses_param())) return std::nullopt;
    const Affine pm = m.concrete() ? m : Affine::constant(Nat(0));
    auto s = step_sym(pm, Nat(0), Affine::unknown());
    if (!s) return std::nullopt;
    if (s->b == Nat(1)) {
      std::optional<Affine> r0;
      if (mode_ == Mode::Iter)
        r0 = Affine::constant(base_);
      else
        r0 = g_.node().eval_sym(&m);
      if (!r0) return std::nullopt;
      return Affine{r0->a + n * s->a, r0->b};
    }
    if (s->b.is_zero()) {
      if (n.is_zero()) return mode_ == Mode::Iter ? Affine::constant(base_) : g_.node().eval_sym(&m);
      return Affine::constant(s->a);
    }
    return std::nullopt;
  }

  // Orbit of a counter-independent step; nullopt if no cycle shows up early.
  std::optional<Nat> cycle(const Nat& m, const Nat& n) const {
    std::unordered_map<Nat, std::uint64_t> seen;
    std::vector<Nat> orbit;
    Nat r = base(m);
    for (std::uint64_t i = 0; i <= kCycleProbe; ++i) {
      auto [it, fresh] = seen.emplace(r, i);
      if (!fresh) {
        const std::uint64_t start = it->second, period = i - start;
        const Nat idx = Nat(start) + (monus(n, Nat(start)) % Nat(period));
        return orbit[idx.to_u64()];
      }
      if (Nat(i) == n) return r;
      orbit.push_back(r);
      r = step(m, Nat(i), r);
    }
    return std::nullopt;
  }

  Nat direct(const Nat& m, std::uint64_t n) const {
    auto look = memo_.lookup(m, n);
    if (look.hit) return *look.hit;
    std::uint64_t i = 0;
    Nat r;
    if (look.from) {
      i = look.start;
      r = *look.from;
    } else {
      r = base(m);
    }
    const bool keep = memo_enabled() && n < kMemoCapacity;
    std::vector<Nat> fresh;
    const std::uint64_t start = look.from ? i + 1 : 0;
    if (keep && !look.from) fresh.push_back(r);
    for (; i < n; ++i) {
      r = step(m, Nat(i), r);
      if (keep) fresh.push_back(r);
    }
    if (keep) memo_.extend(m, start, std::move(fresh));
    return r;
  }

  Mode mode_;
  FuncValue g_, h_;
  Nat base_;
  mutable detail::TrajectoryMemo memo_;
};

void require(const FuncValue& f, int arity, const char* who) {
  if (!f || f.arity() != arity)
    throw std::invalid_argument(std::string(who) + ": expected a function of arity " + std::to_string(arity));
}

}  // namespace

FuncValue pra(FuncValue g, FuncValue h) {
  require(g, 1, "pra");
  require(h, 3, "pra");
  return make_fn<RecNode>(Mode::Pra, std::move(g), std::move(h), Nat(0));
}

FuncValue wpra(FuncValue g, FuncValue h) {
  require(g, 1, "wpra");
  require(h, 3, "wpra");
  return make_fn<RecNode>(Mode::Wpra, std::move(g), std::move(h), Nat(0));
}

FuncValue iter(Nat r, FuncValue h) {
  require(h, 1, "iter");
  return make_fn<RecNode>(Mode::Iter, FuncValue(), std::move(h), std::move(r));
}

FuncValue iter_via_wpra(Nat r, FuncValue h) {
  require(h, 1, "iter_via_wpra");
  FuncValue step = compose(lift1(std::move(h)), proj(2), proj(2), proj(2));
  FuncValue f = wpra(const_fn(std::move(r)), std::move(step));
  // f'(b,a) as a ternary function of (a,b,c), then fix b=c=0
  return fix_nr(compose(lift2(std::move(f)), proj(1), proj(0), proj(0)), Nat(0), Nat(0));
}

FuncValue pra_from_wpra(FuncValue g, FuncValue h, FuncValue pred) {
  require(pred, 1, "pra_from_wpra");
  FuncValue pn = compose(lift1(std::move(pred)), proj(1), proj(1), proj(1));
  return wpra(std::move(g), compose(std::move(h), proj(0), std::move(pn), proj(2)));
}

FuncValue wpra_from_pra(FuncValue g, FuncValue h) {
  FuncValue sn = compose(lift1(succ_fn()), proj(1), proj(1), proj(1));
  return pra(std::move(g), compose(std::move(h), proj(0), std::move(sn), proj(2)));
}

}  // namespace etf::model
