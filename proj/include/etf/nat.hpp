#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace etf {

// Arbitrary-precision natural number. Values below 2^64 are stored inline;
// larger ones live in a shared immutable GMP integer.
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : small_(v) {}  // NOLINT: implicit on purpose
  Nat(int v);                          // NOLINT
  explicit Nat(const mpz_class& z);

  static Nat parse(std::string_view digits);

  bool is_zero() const { return !big_ && small_ == 0; }
  bool fits_u64() const { return !big_; }
  std::uint64_t to_u64() const;  // throws std::overflow_error when too large
  mpz_class to_mpz() const;
  std::string str() const;
  std::size_t bit_length() const;
  std::size_t hash() const;

  Nat succ() const;
  bool is_odd() const;

  friend Nat operator+(const Nat& a, const Nat& b);
  friend Nat operator*(const Nat& a, const Nat& b);
  friend Nat operator/(const Nat& a, const Nat& b);
  friend Nat operator%(const Nat& a, const Nat& b);
  // truncated subtraction
  friend Nat monus(const Nat& a, const Nat& b);

  Nat& operator+=(const Nat& b) { return *this = *this + b; }
  Nat& operator*=(const Nat& b) { return *this = *this * b; }

  friend bool operator==(const Nat& a, const Nat& b);
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b);

 private:
  static Nat normalize(mpz_class z);

  std::uint64_t small_ = 0;
  std::shared_ptr<const mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace etf

template <>
struct std::hash<etf::Nat> {
  std::size_t operator()(const etf::Nat& n) const { return n.hash(); }
};
