#include "etf/model/search.hpp"

#include "memo.hpp"

namespace etf::model {

namespace {

[[noreturn]] void exhausted(const std::string& what, std::uint64_t fuel) {
  throw FuelExhausted(what + ": no answer within " + std::to_string(fuel) +
                      " steps (either none exists or the fuel is too small)");
}

class InverseNode final : public FnNode {
 public:
  InverseNode(FuncValue f, std::uint64_t fuel) : FnNode(1), f_(std::move(f)), fuel_(fuel) {}
  Nat eval(const Nat* a) const override {
    detail::ArgsKey k{{a[0], Nat(0), Nat(0)}};
    if (auto v = memo_.get(k)) return *v;
    Nat s = invert_function(f_, a[0], fuel_);
    memo_.put(k, s);
    return s;
  }
  std::string describe() const override { return "inverse(" + f_.describe() + ")"; }

 private:
  FuncValue f_;
  std::uint64_t fuel_;
  mutable detail::ValueMemo memo_;
};

class MuNode final : public FnNode {
 public:
  MuNode(FuncValue f, std::uint64_t fuel) : FnNode(f.arity() - 1), f_(std::move(f)), fuel_(fuel) {}
  Nat eval(const Nat* a) const override {
    detail::ArgsKey k{{a[0], arity() > 1 ? a[1] : Nat(0), Nat(0)}};
    if (auto v = memo_.get(k)) return *v;
    Nat s = mu_min(f_, std::span<const Nat>(a, arity()), fuel_);
    memo_.put(k, s);
    return s;
  }
  std::string describe() const override { return "mu(" + f_.describe() + ")"; }

 private:
  FuncValue f_;
  std::uint64_t fuel_;
  mutable detail::ValueMemo memo_;
};

}  // namespace

Nat invert_function(const FuncValue& f, const Nat& y, std::uint64_t fuel) {
  if (f.arity() != 1) throw std::invalid_argument("invert_function: unary function expected");
  for (std::uint64_t s = 0; s < fuel; ++s)
    if (f(Nat(s)) == y) return Nat(s);
  exhausted("inverse of " + f.describe() + " at " + y.str(), fuel);
}

Nat mu_min(const FuncValue& f, std::span<const Nat> fixed, std::uint64_t fuel) {
  if (f.arity() < 2 || static_cast<int>(fixed.size()) != f.arity() - 1)
    throw std::invalid_argument("mu_min: expected a binary or ternary function and its fixed arguments");
  std::array<Nat, 3> v;
  for (std::size_t i = 0; i < fixed.size(); ++i) v[i] = fixed[i];
  for (std::uint64_t s = 0; s < fuel; ++s) {
    v[fixed.size()] = Nat(s);
    if (f.call(std::span<const Nat>(v.data(), fixed.size() + 1)).is_zero()) return Nat(s);
  }
  exhausted("minimization of " + f.describe(), fuel);
}

FuncValue inverse_fn(FuncValue f, std::uint64_t fuel) {
  if (f.arity() != 1) throw std::invalid_argument("inverse_fn: unary function expected");
  return make_fn<InverseNode>(std::move(f), fuel);
}

FuncValue mu_fn(FuncValue f, std::uint64_t fuel) {
  if (f.arity() < 2) throw std::invalid_argument("mu_fn: binary or ternary function expected");
  return make_fn<MuNode>(std::move(f), fuel);
}

}  // namespace etf::model
