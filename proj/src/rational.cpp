#include "swfcheck/rational.hpp"

namespace swf {

namespace detail {

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = uabs(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = char('0' + int(u % 10));
    u /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

}  // namespace detail

std::string Rat::str() const {
  std::string out = detail::i128_to_string(num_);
  if (den_ != 1) {
    out.push_back('/');
    out += detail::i128_to_string(den_);
  }
  return out;
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw parse_error("empty integer in rational");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw parse_error("sign without digits in rational");
    Int v = 0;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw parse_error("bad digit in rational: '" + std::string(s) + "'");
      v = detail::checked_mul(v, 10);
      v = detail::checked_add(v, c - '0');
    }
    return neg ? detail::checked_sub(0, v) : v;
  };

  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text), 1);
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in rational: '" + std::string(text) + "'");
  return Rat(num, den);
}

}  // namespace swf
