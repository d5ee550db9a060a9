#include "doctest.h"
#include "etf/nat.hpp"

using etf::Nat;

TEST_CASE("nat small arithmetic") {
  CHECK(Nat(3) + Nat(4) == Nat(7));
  CHECK(Nat(6) * Nat(7) == Nat(42));
  CHECK(monus(Nat(3), Nat(5)) == Nat(0));
  CHECK(monus(Nat(5), Nat(3)) == Nat(2));
  CHECK(Nat(7) / Nat(2) == Nat(3));
  CHECK(Nat(7) % Nat(2) == Nat(1));
}

TEST_CASE("nat promotes to big integers and back") {
  Nat max64(UINT64_MAX);
  Nat over = max64.succ();
  CHECK(!over.fits_u64());
  CHECK(over.str() == "18446744073709551616");
  CHECK(monus(over, Nat(1)) == max64);
  CHECK(monus(over, Nat(1)).fits_u64());
  CHECK(over > max64);
  CHECK(Nat::parse("18446744073709551616") == over);
  Nat sq = over * over;
  CHECK(sq.str() == "340282366920938463463374607431768211456");
  CHECK(sq / over == over);
  CHECK((sq + Nat(1)) % over == Nat(1));
  CHECK(!sq.is_odd());
  CHECK((sq + Nat(1)).is_odd());
  CHECK(std::hash<Nat>{}(over * Nat(1)) == std::hash<Nat>{}(over));
}

TEST_CASE("nat rejects malformed literals") {
  CHECK_THROWS(Nat::parse(""));
  CHECK_THROWS(Nat::parse("12a"));
  CHECK_THROWS(Nat(-1));
}
