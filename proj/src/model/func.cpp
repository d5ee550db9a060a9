#include "etf/model/func.hpp"

#include <atomic>

namespace etf::model {

namespace {
std::atomic<bool> g_memo{true};
}

void set_memo_enabled(bool on) { g_memo.store(on); }
bool memo_enabled() { return g_memo.load(std::memory_order_relaxed); }

std::optional<Affine> FnNode::eval_sym(const Affine* args) const {
  std::array<Nat, 3> v;
  for (int i = 0; i < arity_; ++i) {
    if (!args[i].concrete()) return std::nullopt;
    v[i] = args[i].a;
  }
  return Affine::constant(eval(v.data()));
}

void FuncValue::expect(int k) const {
  if (!node_) throw std::invalid_argument("call of an empty function value");
  if (node_->arity() != k)
    throw std::invalid_argument("function of arity " + std::to_string(node_->arity()) + " called with " +
                                std::to_string(k) + " argument(s)");
}

Nat FuncValue::operator()(const Nat& a) const {
  expect(1);
  return node_->eval(&a);
}

Nat FuncValue::operator()(const Nat& a, const Nat& b) const {
  expect(2);
  const std::array<Nat, 2> v{a, b};
  return node_->eval(v.data());
}

Nat FuncValue::operator()(const Nat& a, const Nat& b, const Nat& c) const {
  expect(3);
  const std::array<Nat, 3> v{a, b, c};
  return node_->eval(v.data());
}

Nat FuncValue::call(std::span<const Nat> args) const {
  expect(static_cast<int>(args.size()));
  return node_->eval(args.data());
}

std::optional<Affine> FuncValue::call_sym(std::span<const Affine> args) const {
  expect(static_cast<int>(args.size()));
  return node_->eval_sym(args.data());
}

}  // namespace etf::model
