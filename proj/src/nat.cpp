#include "etf/nat.hpp"

#include <ostream>
#include <stdexcept>

namespace etf {

namespace {

mpz_class from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

}  // namespace

Nat::Nat(int v) {
  if (v < 0) throw std::domain_error("Nat: negative value");
  small_ = static_cast<std::uint64_t>(v);
}

Nat::Nat(const mpz_class& z) {
  if (sgn(z) < 0) throw std::domain_error("Nat: negative value");
  *this = normalize(z);
}

Nat Nat::normalize(mpz_class z) {
  Nat out;
  if (mpz_sizeinbase(z.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, z.get_mpz_t());
    out.small_ = v;
  } else {
    out.big_ = std::make_shared<const mpz_class>(std::move(z));
  }
  return out;
}

Nat Nat::parse(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("Nat: empty literal");
  for (char c : digits)
    if (c < '0' || c > '9') throw std::invalid_argument("Nat: bad literal '" + std::string(digits) + "'");
  return normalize(mpz_class(std::string(digits), 10));
}

std::uint64_t Nat::to_u64() const {
  if (big_) throw std::overflow_error("Nat does not fit in 64 bits");
  return small_;
}

mpz_class Nat::to_mpz() const { return big_ ? *big_ : from_u64(small_); }

std::string Nat::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

std::size_t Nat::bit_length() const {
  if (big_) return mpz_sizeinbase(big_->get_mpz_t(), 2);
  std::size_t n = 0;
  for (std::uint64_t v = small_; v; v >>= 1) ++n;
  return n;
}

std::size_t Nat::hash() const {
  if (!big_) return std::hash<std::uint64_t>{}(small_);
  const mpz_srcptr p = big_->get_mpz_t();
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < p->_mp_size; ++i)
    h ^= std::hash<mp_limb_t>{}(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Nat Nat::succ() const {
  if (!big_ && small_ != UINT64_MAX) return Nat(small_ + 1);
  return normalize(to_mpz() + 1);
}

bool Nat::is_odd() const { return big_ ? mpz_odd_p(big_->get_mpz_t()) : (small_ & 1U); }

Nat operator+(const Nat& a, const Nat& b) {
  if (!a.big_ && !b.big_) {
    std::uint64_t r;
    if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Nat(r);
  }
  return Nat::normalize(a.to_mpz() + b.to_mpz());
}

Nat operator*(const Nat& a, const Nat& b) {
  if (a.is_zero() || b.is_zero()) return Nat();
  if (!a.big_ && !b.big_) {
    std::uint64_t r;
    if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Nat(r);
  }
  return Nat::normalize(a.to_mpz() * b.to_mpz());
}

Nat operator/(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw std::domain_error("Nat: division by zero");
  if (!a.big_ && !b.big_) return Nat(a.small_ / b.small_);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Nat::normalize(q);
}

Nat operator%(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw std::domain_error("Nat: division by zero");
  if (!a.big_ && !b.big_) return Nat(a.small_ % b.small_);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Nat::normalize(r);
}

Nat monus(const Nat& a, const Nat& b) {
  if (a <= b) return Nat();
  if (!a.big_) return Nat(a.small_ - b.small_);
  return Nat::normalize(a.to_mpz() - b.to_mpz());
}

bool operator==(const Nat& a, const Nat& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;  // normalized: big values never fit in 64 bits
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  if (!a.big_) return std::strong_ordering::less;
  if (!b.big_) return std::strong_ordering::greater;
  const int c = cmp(*a.big_, *b.big_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.str(); }

}  // namespace etf
