#pragma once

// Total functions on the naturals of arity 1 to 3, as trees of immutable
// nodes. Nodes may also be evaluated symbolically on affine arguments, which
// lets recursions with astronomically large counters be summarized.

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "etf/nat.hpp"

namespace etf::model {

// Unbounded search ran out of budget. The search may have no answer at all;
// the error cannot tell the two apart.
class FuelExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recursion whose counter is too large to iterate and which could not be
// summarized.
class RecursionTooDeep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// a + b*X for a single unknown X.
struct Affine {
  Nat a;
  Nat b;
  bool concrete() const { return b.is_zero(); }
  static Affine constant(Nat v) { return {std::move(v), Nat(0)}; }
  static Affine unknown() { return {Nat(0), Nat(1)}; }
};

class FnNode {
 public:
  explicit FnNode(int arity) : arity_(arity) {}
  virtual ~FnNode() = default;
  FnNode(const FnNode&) = delete;
  FnNode& operator=(const FnNode&) = delete;

  int arity() const { return arity_; }
  virtual Nat eval(const Nat* args) const = 0;
  // Default: evaluate when every argument is concrete, otherwise give up.
  virtual std::optional<Affine> eval_sym(const Affine* args) const;
  // False only when the result provably ignores argument i.
  virtual bool depends_on(int) const { return true; }
  virtual std::string describe() const = 0;

 private:
  int arity_;
};

class FuncValue {
 public:
  FuncValue() = default;
  explicit FuncValue(std::shared_ptr<const FnNode> n) : node_(std::move(n)) {}

  int arity() const { return node_->arity(); }
  explicit operator bool() const { return node_ != nullptr; }

  Nat operator()(const Nat& a) const;
  Nat operator()(const Nat& a, const Nat& b) const;
  Nat operator()(const Nat& a, const Nat& b, const Nat& c) const;
  Nat call(std::span<const Nat> args) const;  // std::invalid_argument on arity mismatch
  std::optional<Affine> call_sym(std::span<const Affine> args) const;
  bool depends_on(int i) const { return node_->depends_on(i); }
  std::string describe() const { return node_->describe(); }
  const FnNode& node() const { return *node_; }

 private:
  void expect(int k) const;
  std::shared_ptr<const FnNode> node_;
};

template <class Node, class... A>
FuncValue make_fn(A&&... a) {
  return FuncValue(std::make_shared<const Node>(std::forward<A>(a)...));
}

// Memoization is a pure cache; switching it off must never change a result.
void set_memo_enabled(bool on);
bool memo_enabled();

class MemoOff {
 public:
  MemoOff() : was_(memo_enabled()) { set_memo_enabled(false); }
  ~MemoOff() { set_memo_enabled(was_); }
  MemoOff(const MemoOff&) = delete;
  MemoOff& operator=(const MemoOff&) = delete;

 private:
  bool was_;
};

inline constexpr std::size_t kMemoCapacity = std::size_t{1} << 20;

}  // namespace etf::model
