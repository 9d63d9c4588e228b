#include "patterncount/int128.hpp"

#include <algorithm>
#include <cmath>

#include "patterncount/errors.hpp"

namespace patterncount {

void Int128::overflow(const char* what) {
  fail(ErrorCode::OverflowDetected, std::string("128-bit ") + what + " overflowed");
}

std::string Int128::to_string() const {
  if (v_ == 0) return "0";
  bool neg = v_ < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

mpz_class Int128::to_mpz() const { return mpz_class(to_string()); }

Int128 Int128::parse(std::string_view text) {
  if (text.empty()) fail(ErrorCode::ParseError, "empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) fail(ErrorCode::ParseError, "bad integer literal");
  Int128 r;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') fail(ErrorCode::ParseError, "bad integer literal '" + std::string(text) + "'");
    r = r * 10 + (neg ? -(c - '0') : (c - '0'));
  }
  return r;
}

std::string to_decimal(const Int128& v) { return v.to_string(); }
std::string to_decimal(const mpz_class& v) { return v.get_str(); }

void require_int128_headroom(std::size_t vertices, std::size_t n) {
  double bits = std::ceil(static_cast<double>(vertices) * std::log2(static_cast<double>(n) + 1.0));
  if (bits >= 127.0) {
    fail(ErrorCode::OverflowDetected,
         "count may exceed 128 bits (" + std::to_string(vertices) + " vertices, n = " +
             std::to_string(n) + "); use big-integer mode");
  }
}

}  // namespace patterncount
