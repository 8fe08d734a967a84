#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace maxlin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses `p` or `p/q` (optional sign on p, q > 0). Throws std::invalid_argument
/// on anything else, including decimal points and exponents.
Rational parse_rational(std::string_view text);

/// Lowest terms, `p` when the denominator is 1, else `p/q`.
std::string format_rational(const Rational& value);

bool is_integral(const Rational& value);

/// Exact test of base^exponent <= 2^bits without materialising huge powers.
bool power_at_most_pow2(const BigInt& base, std::uint64_t exponent, std::uint64_t bits);

/// Largest q >= 0 with base^q <= 2^bits. Requires base >= 2.
std::uint64_t max_power_within_pow2(const BigInt& base, std::uint64_t bits);

}  // namespace maxlin
