#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace patterncount {

// Signed 128-bit integer whose arithmetic throws OverflowDetected instead of wrapping.
class Int128 {
 public:
  constexpr Int128() = default;
  constexpr Int128(long long v) : v_(v) {}  // NOLINT(runtime/explicit)

  static constexpr Int128 from_raw(__int128 v) {
    Int128 r;
    r.v_ = v;
    return r;
  }
  constexpr __int128 raw() const { return v_; }

  friend Int128 operator+(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
    return from_raw(r);
  }
  friend Int128 operator-(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
    return from_raw(r);
  }
  friend Int128 operator*(Int128 a, Int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
    return from_raw(r);
  }
  Int128& operator+=(Int128 o) { return *this = *this + o; }
  Int128& operator-=(Int128 o) { return *this = *this - o; }
  Int128& operator*=(Int128 o) { return *this = *this * o; }

  friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(Int128 a, Int128 b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const;
  mpz_class to_mpz() const;
  static Int128 parse(std::string_view text);

 private:
  [[noreturn]] static void overflow(const char* what);
  __int128 v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Int128& v) { return os << v.to_string(); }

std::string to_decimal(const Int128& v);
std::string to_decimal(const mpz_class& v);

// Throws OverflowDetected when a count over `vertices` tree nodes and a length-n
// input could exceed the signed 128-bit range.
void require_int128_headroom(std::size_t vertices, std::size_t n);

}  // namespace patterncount
