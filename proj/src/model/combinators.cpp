#include "etf/model/combinators.hpp"

#include "memo.hpp"

namespace etf::model {

namespace {

class ConstNode final : public FnNode {
 public:
  explicit ConstNode(Nat c) : FnNode(1), c_(std::move(c)) {}
  Nat eval(const Nat*) const override { return c_; }
  std::optional<Affine> eval_sym(const Affine*) const override { return Affine::constant(c_); }
  bool depends_on(int) const override { return false; }
  std::string describe() const override { return "const(" + c_.str() + ")"; }

 private:
  Nat c_;
};

class ProjNode final : public FnNode {
 public:
  explicit ProjNode(int i) : FnNode(3), i_(i) {}
  Nat eval(const Nat* a) const override { return a[i_]; }
  std::optional<Affine> eval_sym(const Affine* a) const override { return a[i_]; }
  bool depends_on(int j) const override { return j == i_; }
  std::string describe() const override { return "proj" + std::to_string(i_); }

 private:
  int i_;
};

class SuccNode final : public FnNode {
 public:
  SuccNode() : FnNode(1) {}
  Nat eval(const Nat* a) const override { return a[0].succ(); }
  std::optional<Affine> eval_sym(const Affine* a) const override { return Affine{a[0].a.succ(), a[0].b}; }
  std::string describe() const override { return "succ"; }
};

// f(m,n,r)=g(first k args)
class LiftNode final : public FnNode {
 public:
  explicit LiftNode(FuncValue g) : FnNode(3), g_(std::move(g)) {}
  Nat eval(const Nat* a) const override { return g_.node().eval(a); }
  std::optional<Affine> eval_sym(const Affine* a) const override { return g_.node().eval_sym(a); }
  bool depends_on(int j) const override { return j < g_.arity() && g_.depends_on(j); }
  std::string describe() const override { return "lift(" + g_.describe() + ")"; }

 private:
  FuncValue g_;
};

// f(a..)=g(a.., fixed..)
class FixNode final : public FnNode {
 public:
  FixNode(FuncValue g, std::vector<Nat> fixed)
      : FnNode(3 - static_cast<int>(fixed.size())), g_(std::move(g)), fixed_(std::move(fixed)) {}
  Nat eval(const Nat* a) const override {
    std::array<Nat, 3> v;
    const int k = arity();
    for (int i = 0; i < k; ++i) v[i] = a[i];
    for (std::size_t i = 0; i < fixed_.size(); ++i) v[k + i] = fixed_[i];
    return g_.node().eval(v.data());
  }
  std::optional<Affine> eval_sym(const Affine* a) const override {
    std::array<Affine, 3> v;
    const int k = arity();
    for (int i = 0; i < k; ++i) v[i] = a[i];
    for (std::size_t i = 0; i < fixed_.size(); ++i) v[k + i] = Affine::constant(fixed_[i]);
    return g_.node().eval_sym(v.data());
  }
  bool depends_on(int j) const override { return g_.depends_on(j); }
  std::string describe() const override { return "fix(" + g_.describe() + ")"; }

 private:
  FuncValue g_;
  std::vector<Nat> fixed_;
};

class ComposeNode final : public FnNode {
 public:
  ComposeNode(FuncValue g, std::array<FuncValue, 3> h) : FnNode(3), g_(std::move(g)), h_(std::move(h)) {}
  Nat eval(const Nat* a) const override {
    std::array<Nat, 3> v;
    for (int i = 0; i < 3; ++i)
      if (g_.depends_on(i)) v[i] = h_[i].node().eval(a);
    return g_.node().eval(v.data());
  }
  std::optional<Affine> eval_sym(const Affine* a) const override {
    std::array<Affine, 3> v;
    for (int i = 0; i < 3; ++i) {
      if (!g_.depends_on(i)) continue;
      auto x = h_[i].node().eval_sym(a);
      if (!x) return std::nullopt;
      v[i] = std::move(*x);
    }
    return g_.node().eval_sym(v.data());
  }
  bool depends_on(int j) const override {
    for (int i = 0; i < 3; ++i)
      if (g_.depends_on(i) && h_[i].depends_on(j)) return true;
    return false;
  }
  std::string describe() const override {
    return "compose(" + g_.describe() + "; " + h_[0].describe() + ", " + h_[1].describe() + ", " + h_[2].describe() + ")";
  }

 private:
  FuncValue g_;
  std::array<FuncValue, 3> h_;
};

class NativeNode final : public FnNode {
 public:
  NativeNode(int arity, std::string name, NativeEval f, NativeSym sym, unsigned deps)
      : FnNode(arity), name_(std::move(name)), f_(std::move(f)), sym_(std::move(sym)), deps_(deps) {}
  Nat eval(const Nat* a) const override { return f_(a); }
  std::optional<Affine> eval_sym(const Affine* a) const override {
    if (sym_) return sym_(a);
    return FnNode::eval_sym(a);
  }
  bool depends_on(int j) const override { return (deps_ >> j) & 1U; }
  std::string describe() const override { return name_; }

 private:
  std::string name_;
  NativeEval f_;
  NativeSym sym_;
  unsigned deps_;
};

void require(const FuncValue& f, int arity, const char* who) {
  if (!f || f.arity() != arity)
    throw std::invalid_argument(std::string(who) + ": expected a function of arity " + std::to_string(arity));
}

}  // namespace

FuncValue const_fn(Nat c) { return make_fn<ConstNode>(std::move(c)); }

FuncValue proj(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("projection index out of range");
  return make_fn<ProjNode>(i);
}

FuncValue succ_fn() { return make_fn<SuccNode>(); }

FuncValue lift2(FuncValue g) {
  require(g, 2, "lift2");
  return make_fn<LiftNode>(std::move(g));
}

FuncValue lift1(FuncValue g) {
  require(g, 1, "lift1");
  return make_fn<LiftNode>(std::move(g));
}

FuncValue fix_r(FuncValue g, Nat r) {
  require(g, 3, "fix_r");
  return make_fn<FixNode>(std::move(g), std::vector<Nat>{std::move(r)});
}

FuncValue fix_nr(FuncValue g, Nat n, Nat r) {
  require(g, 3, "fix_nr");
  return make_fn<FixNode>(std::move(g), std::vector<Nat>{std::move(n), std::move(r)});
}

FuncValue compose(FuncValue g, FuncValue h1, FuncValue h2, FuncValue h3) {
  require(g, 3, "compose");
  require(h1, 3, "compose");
  require(h2, 3, "compose");
  require(h3, 3, "compose");
  return make_fn<ComposeNode>(std::move(g), std::array<FuncValue, 3>{std::move(h1), std::move(h2), std::move(h3)});
}

FuncValue native(int arity, std::string name, NativeEval f, NativeSym sym, unsigned deps) {
  if (arity < 1 || arity > 3) throw std::invalid_argument("native function arity must be 1..3");
  return make_fn<NativeNode>(arity, std::move(name), std::move(f), std::move(sym), deps);
}

namespace {

class MemoNode final : public FnNode {
 public:
  explicit MemoNode(FuncValue f) : FnNode(f.arity()), f_(std::move(f)) {}
  Nat eval(const Nat* a) const override {
    detail::ArgsKey k;
    for (int i = 0; i < arity(); ++i) k.v[i] = a[i];
    if (auto v = memo_.get(k)) return *v;
    Nat v = f_.node().eval(a);
    memo_.put(k, v);
    return v;
  }
  std::optional<Affine> eval_sym(const Affine* a) const override { return f_.node().eval_sym(a); }
  bool depends_on(int i) const override { return f_.depends_on(i); }
  std::string describe() const override { return f_.describe(); }

 private:
  FuncValue f_;
  mutable detail::ValueMemo memo_;
};

}  // namespace

FuncValue memoized(FuncValue f) { return make_fn<MemoNode>(std::move(f)); }

FuncValue diagonal(FuncValue f) {
  if (f.arity() != 2) throw std::invalid_argument("diagonal: binary function expected");
  return fix_nr(compose(lift2(std::move(f)), proj(0), proj(0), proj(0)), Nat(0), Nat(0));
}

}  // namespace etf::model
