#include "overlap/number.hpp"

#include <stdexcept>

namespace overlap {

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u) {
    s.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

i128 parse_i128(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  unsigned __int128 u = 0;
  const unsigned __int128 lim = (unsigned __int128)1 << 126;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    u = u * 10 + unsigned(c - '0');
    if (u > lim) throw std::overflow_error("integer out of range: " + std::string(s));
  }
  return neg ? -(i128)u : (i128)u;
}

BigInt to_big(i128 v) { return BigInt(v); }


bool fits_i128(const BigInt& v) {
  static const BigInt lim = BigInt(1) << 126;
  return v < lim && v > -lim;
}

i128 to_i128(const BigInt& v) {
  if (!fits_i128(v)) throw std::overflow_error("value exceeds 126 bits");
  return static_cast<i128>(v);
}

i128 to_i128(const Wide& v) {
  static const Wide lim = Wide(1) << 126;
  if (v >= lim || v <= -lim) throw std::overflow_error("value exceeds 126 bits");
  return static_cast<i128>(v);
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  auto parse_big = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("bad rational");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational");
    for (size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw std::invalid_argument("bad rational: " + std::string(t));
    std::string body(t.substr(i));
    BigInt v(body);
    return t[0] == '-' ? BigInt(-v) : v;
  };
  if (slash == std::string_view::npos) return Rational(parse_big(s));
  BigInt num = parse_big(s.substr(0, slash));
  BigInt den = parse_big(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  auto num = numerator(r);
  auto den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace overlap
