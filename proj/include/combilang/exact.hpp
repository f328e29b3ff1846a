#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace combilang {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", with q >= 1 (integers print as "n/1").
std::string to_pq(const Rational& x);

// Accepts "p/q" or a bare integer "p".
Rational parse_pq(std::string_view text);

std::string to_string(const BigInt& x);

// 2^e as an exact integer.
BigInt pow2(unsigned e);

double to_double(const Rational& x);

} // namespace combilang
