#include <set>

#include "doctest.h"
#include "etf/model/builtins.hpp"
#include "etf/model/combinators.hpp"
#include "etf/model/constructions.hpp"
#include "etf/model/search.hpp"
#include "etf/model/theorem2.hpp"

using namespace etf;
using namespace etf::model;

namespace {

Nat N(std::uint64_t v) { return Nat(v); }

FuncValue unary(const char* name, std::function<std::uint64_t(std::uint64_t)> f) {
  return native(1, name, [f](const Nat* x) { return Nat(f(x[0].to_u64())); }, {}, 1);
}
FuncValue binary(const char* name, std::function<std::uint64_t(std::uint64_t, std::uint64_t)> f) {
  return native(2, name, [f](const Nat* x) { return Nat(f(x[0].to_u64(), x[1].to_u64())); }, {}, 3);
}

// t(r)<=m as a threshold test, zero when it holds
FuncValue below_t() {
  return native(3, "below_t", [](const Nat* x) {
    const Nat& r = x[2];
    return r * (r + Nat(1)) / Nat(2) <= x[0] ? Nat(0) : Nat(1);
  });
}

}  // namespace

TEST_CASE("maximum") {
  for (Realization re : {Realization::Literal, Realization::Fast}) {
    MaxSuite s = max_suite(builtin("t"), below_t(), re);
    CHECK(s.max2(N(3), N(5)) == N(5));
    CHECK(s.max2(N(5), N(3)) == N(5));
    CHECK(diagonal(s.fmax)(N(3)) == N(3));
    for (int m = 0; m <= 12; ++m)
      for (int n = 0; n <= 12; ++n) {
        CHECK(s.max2(N(m), N(n)) == N(std::max(m, n)));
        CHECK(s.fmax(N(m), N(n)) == s.fmax_oracle(N(m), N(n)));
        CHECK(s.argmax(N(m), N(n)) == s.argmax_oracle(N(m), N(n)));
      }
  }
  FuncValue nonzero = native(3, "one", [](const Nat*) { return Nat(1); });
  CHECK_THROWS_AS(max_suite(builtin("t"), nonzero, Realization::Fast), PreconditionFailed);
}

TEST_CASE("argmax needs the updated maximum") {
  // f peaks late: comparing with the old maximum misses new records
  FuncValue f = unary("sq", [](std::uint64_t n) { return n * n; });
  FuncValue all = native(3, "zero", [](const Nat*) { return Nat(0); });
  MaxSuite s = max_suite(f, all, Realization::Fast);
  CHECK(s.argmax(N(0), N(5)) == N(5));
  CHECK(s.argmax_literal(N(0), N(5)) != N(5));
}

TEST_CASE("pairing") {
  const Pairing& fast = pairing(Realization::Fast);
  Pairing closed = pairing_oracle();
  CHECK(fast.t(N(3)) == N(6));
  CHECK(fast.pair(N(1), N(2)) == N(8));
  CHECK(fast.p1(N(8)) == N(1));
  CHECK(fast.p2(N(8)) == N(2));
  CHECK(fast.pair(N(0), N(0)) == N(0));
  std::set<Nat> seen;
  for (int m = 0; m <= 30; ++m)
    for (int n = 0; n <= 30; ++n) {
      Nat k = fast.pair(N(m), N(n));
      CHECK(k == closed.pair(N(m), N(n)));
      CHECK(fast.p1(k) == N(m));
      CHECK(fast.p2(k) == N(n));
      seen.insert(k);
    }
  CHECK(seen.size() == 31u * 31u);
  for (int k = 0; k <= 300; ++k) CHECK(fast.pair(fast.p1(N(k)), fast.p2(N(k))) == N(k));
  Nat big = Nat::parse("1000000000000000000000");
  CHECK(closed.pair(closed.p1(big), closed.p2(big)) == big);
}

TEST_CASE("literal pairing matches the fast one") {
  Pairing lit = pairing_suite(Realization::Literal);
  const Pairing& fast = pairing(Realization::Fast);
  for (int n = 0; n <= 25; ++n) {
    CHECK(lit.t(N(n)) == fast.t(N(n)));
    CHECK(lit.tprime(N(n)) == fast.tprime(N(n)));
  }
  for (int k = 0; k <= 30; ++k) {
    CHECK(lit.p1(N(k)) == fast.p1(N(k)));
    CHECK(lit.p2(N(k)) == fast.p2(N(k)));
  }
}

TEST_CASE("quotient") {
  for (Realization re : {Realization::Literal, Realization::Fast}) {
    FuncValue q = quotient_fn(re);
    CHECK(q(N(6)) == N(3));
    for (int n = 0; n <= 60; ++n) CHECK(q(N(n)) == N(n / 2));
  }
}

TEST_CASE("permutation extension") {
  FuncValue never = unary("empty", [](std::uint64_t) { return 0; });
  for (Realization re : {Realization::Literal, Realization::Fast}) {
    PermExtension e = perm_extend(never, builtin("identity"), re);
    for (int n = 0; n <= 40; ++n) CHECK(e.g(N(n)) == N(2 * n));
  }
  FuncValue chi = unary("one_mod_4", [](std::uint64_t n) { return n % 4 == 1 ? 1 : 0; });
  FuncValue h = unary("half_up", [](std::uint64_t n) { return (n + 1) / 2; });
  PermExtension e = perm_extend(chi, h, Realization::Fast);
  std::set<Nat> values;
  for (int n = 0; n <= 99; ++n) {
    Nat v = e.g(N(n));
    CHECK(values.insert(v).second);
    if (n % 4 == 1) CHECK(v == h(N(n)));
  }
  for (int n = 0; n <= 60; ++n) {
    CHECK(e.enum_f(N(n)) >= N(n));
    CHECK(e.enum_f(N(n)) < e.enum_f(N(n + 1)));
  }
  for (int v = 0; v <= 40; ++v) CHECK_NOTHROW(invert_function(e.g, N(v), 10000));
  PermExtension lit = perm_extend(chi, h, Realization::Literal, 20);
  for (int n = 0; n <= 20; ++n) CHECK(lit.g(N(n)) == e.g(N(n)));

  FuncValue even = unary("even", [](std::uint64_t n) { return n % 2 == 0 ? 1 : 0; });
  CHECK_THROWS_AS(perm_extend(even, h, Realization::Fast), PreconditionFailed);
  FuncValue clash = unary("clash", [](std::uint64_t) { return 1; });
  CHECK_THROWS_AS(perm_extend(chi, clash, Realization::Fast), PreconditionFailed);
}

TEST_CASE("minimization pipelines") {
  Pipelines p;
  // exactly one zero per row, at m mod 5 + 1
  FuncValue f = binary("mod5", [](std::uint64_t m, std::uint64_t n) { return n == m % 5 + 1 ? 0 : 1; });
  FuncValue w = p.p_4to3(f);
  for (int m = 0; m <= 30; ++m) CHECK(w(N(m)) == N(m % 5 + 1));

  FuncValue rows = binary("rows", [](std::uint64_t m, std::uint64_t n) { return n >= m % 3 ? 0 : 7; });
  FuncValue least = p.p_3to2(rows);
  FuncValue least2 = p.p_1to2(rows);
  for (int m = 0; m <= 20; ++m) {
    CHECK(least(N(m)) == N(m % 3));
    CHECK(least2(N(m)) == N(m % 3));
  }
  FuncValue swap = unary("swap", [](std::uint64_t n) { return n ^ 1; });
  FuncValue inv = p.p_3to4(swap);
  for (int n = 0; n <= 30; ++n) CHECK(swap(inv(N(n))) == N(n));
  FuncValue tern = native(3, "tern", [](const Nat* x) { return x[2] >= x[0] + x[1] ? Nat(0) : Nat(1); });
  FuncValue g = p.p_2to1(tern);
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) CHECK(g(N(m), N(n)) == N(m + n));
}

TEST_CASE("literal pipeline on a small range") {
  Pipelines p{Realization::Literal, kDefaultFuel};
  FuncValue f = binary("mod5", [](std::uint64_t m, std::uint64_t n) { return n == m % 5 + 1 ? 0 : 1; });
  FuncValue w = p.p_4to3(f);
  for (int m = 0; m <= 3; ++m) CHECK(w(N(m)) == N(m % 5 + 1));
}
