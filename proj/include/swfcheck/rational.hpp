#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swf {

struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("rational add overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("rational sub overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("rational mul overflow");
  return r;
}

std::string i128_to_string(i128 v);

}  // namespace detail

// Exact rational number over 128-bit integers. Always stored reduced with a
// positive denominator; arithmetic that would overflow throws instead of
// silently wrapping. There is no floating point anywhere in here.
class Rat {
 public:
  using Int = detail::i128;

  constexpr Rat() : num_(0), den_(1) {}
  constexpr Rat(long long n) : num_(n), den_(1) {}

  static Rat of(long long num, long long den) { return Rat(Int(num), Int(den)); }
  static Rat from_int128(Int num, Int den) { return Rat(num, den); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const {
    Rat r;
    r.num_ = detail::checked_sub(0, num_);
    r.den_ = den_;
    return r;
  }

  Rat operator+(const Rat& o) const {
    using namespace detail;
    u128 g = gcd_u128(uabs(den_), uabs(o.den_));
    Int db = den_ / Int(g);
    Int num = checked_add(checked_mul(num_, o.den_ / Int(g)), checked_mul(o.num_, db));
    Int den = checked_mul(db, o.den_);
    return Rat(num, den);
  }

  Rat operator-(const Rat& o) const { return *this + (-o); }

  Rat operator*(const Rat& o) const {
    using namespace detail;
    u128 g1 = gcd_u128(uabs(num_), uabs(o.den_));
    u128 g2 = gcd_u128(uabs(o.num_), uabs(den_));
    Int num = checked_mul(num_ / Int(g1), o.num_ / Int(g2));
    Int den = checked_mul(den_ / Int(g2), o.den_ / Int(g1));
    return Rat(num, den);
  }

  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    Rat inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = detail::checked_sub(0, inv.num_);
      inv.den_ = detail::checked_sub(0, inv.den_);
    }
    return *this * inv;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::strong_ordering operator<=>(const Rat& o) const {
    using namespace detail;
    Int lhs = checked_mul(num_, o.den_);
    Int rhs = checked_mul(o.num_, den_);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q" for non-integers, plain "p" otherwise.
  std::string str() const;

  double approx() const { return double(num_) / double(den_); }

  // Accepts "p", "p/q", optional leading '-'.
  static Rat parse(std::string_view text);

 private:
  Rat(Int num, Int den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_sub(0, num_);
      den_ = detail::checked_sub(0, den_);
    }
    detail::u128 g = detail::gcd_u128(detail::uabs(num_), detail::uabs(den_));
    if (g > 1) {
      num_ /= Int(g);
      den_ /= Int(g);
    }
  }

  Int num_;
  Int den_;
};

}  // namespace swf
