#pragma once

// Unbounded searches, each guarded by a fuel budget. Running out of fuel
// raises FuelExhausted; a search never returns a default value.

#include "etf/model/func.hpp"

namespace etf::model {

// Least s with f(s)=y among s < fuel.
Nat invert_function(const FuncValue& f, const Nat& y, std::uint64_t fuel = kDefaultFuel);

// Least n with f(args..., n)=0, n < fuel. `fixed` holds the other arguments
// (one for binary f, two for ternary f).
Nat mu_min(const FuncValue& f, std::span<const Nat> fixed, std::uint64_t fuel = kDefaultFuel);

// The same searches as functions: inverse_fn(f)(y), mu_fn(f) of arity
// f.arity()-1. Results are memoized.
FuncValue inverse_fn(FuncValue f, std::uint64_t fuel = kDefaultFuel);
FuncValue mu_fn(FuncValue f, std::uint64_t fuel = kDefaultFuel);

}  // namespace etf::model
