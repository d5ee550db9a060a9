#pragma once

// Internal pieces shared by the suite definitions.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "etf/harness.hpp"
#include "etf/model/eval.hpp"

namespace etf::harness::detail {

// What a checker sees: the options and the label of its claim, for fault
// injection.
class Context {
 public:
  Context(const Options& opt, std::string label) : opt_(opt), label_(std::move(label)) {}

  const Options& options() const { return opt_; }
  const std::string& label() const { return label_; }
  std::uint64_t fuel() const { return opt_.fuel; }

  // base with every fault aimed at this claim applied.
  model::Env env(model::Env base) const;
  // f, or its replacement when a fault targets `name` in this claim.
  model::FuncValue fn(const std::string& name, model::FuncValue f) const;

 private:
  const Options& opt_;
  std::string label_;
};

using Checker = std::function<ClaimResult(const Context&)>;

struct Claim {
  std::string label;
  Checker check;
};

struct SuiteDef {
  std::vector<std::pair<std::string, std::uint64_t>> bounds;
  std::vector<Claim> claims;
};

SuiteDef suite_t1(const Options& opt);
SuiteDef suite_rec(const Options& opt);
SuiteDef suite_iter(const Options& opt);
SuiteDef suite_li(const Options& opt);
SuiteDef suite_leq(const Options& opt);
SuiteDef suite_max(const Options& opt);
SuiteDef suite_pair(const Options& opt);
SuiteDef suite_quot(const Options& opt);
SuiteDef suite_perm(const Options& opt);
SuiteDef suite_min(const Options& opt);
SuiteDef suite_compile(const Options& opt);
SuiteDef suite_kernel(const Options& opt);

// --- result helpers

ClaimResult pass();
ClaimResult fail(Assignment where, std::string reason);
// The first failing result, or pass.
ClaimResult first_failure(std::initializer_list<std::function<ClaimResult()>> checks);

std::string num(std::uint64_t v);
std::string num(const Nat& v);

// --- formula claims

// LT(a,b) and LE(a,b) written out with the order function lt.
std::string expand_order(std::string_view text);

// Parses a claim over env's names plus the number variables n, m, r, k,
// after expanding LT and LE.
syntax::Formula parse_claim(const std::string& text, const model::Env& env);

// Kernel verdict on phi <-> compile(phi)=0, as a claim result.
ClaimResult check_compilation_proof(const syntax::Formula& phi);

// Checks a formula for every value of its free number variables in [0,B]
// (those not bound by env), enumerating the first variable slowest. Number
// quantifiers inside range over [0,B] as well. The first failing assignment
// is lexicographically least. Free variables are n, m, r, k.
ClaimResult check_formula(const std::string& text, const model::Env& env, std::uint64_t B);

// Formula claims in a row, each with its own box.
struct Boxed {
  std::string text;
  std::uint64_t bound;
};
ClaimResult check_formulas(const std::vector<Boxed>& items, const model::Env& env);

// Pointwise agreement of two functions of the same arity on [0,B]^arity.
// Arguments are reported as n; m,n; m,n,r unless `names` says otherwise.
ClaimResult agree(const model::FuncValue& f, const model::FuncValue& g, std::uint64_t B, const std::string& what,
                  const std::vector<std::string>& names = {});

// Deterministic generator for a suite's randomized families.
std::mt19937_64 rng(std::uint64_t seed, std::string_view family);

std::uint64_t main_bound(const Options& opt, std::uint64_t fallback);

}  // namespace etf::harness::detail
