#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace overlap {

using i64 = std::int64_t;
using i128 = __int128;
using Wide = boost::multiprecision::int256_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(i128 v);
i128 parse_i128(std::string_view s);

BigInt to_big(i128 v);
inline Wide to_wide(i128 v) { return Wide(v); }
i128 to_i128(const BigInt& v);  // throws std::overflow_error
i128 to_i128(const Wide& v);
bool fits_i128(const BigInt& v);

Rational parse_rational(std::string_view s);  // "p" or "p/q"
std::string to_string(const Rational& r);      // "p" or "p/q"

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

}  // namespace overlap
