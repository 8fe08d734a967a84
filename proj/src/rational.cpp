#include "maxlin/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace maxlin {

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("expected digits");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in number");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, true));
  }
  BigInt num = parse_integer(text.substr(0, slash), true);
  BigInt den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  const auto& num = boost::multiprecision::numerator(value);
  const auto& den = boost::multiprecision::denominator(value);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

bool is_integral(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

bool power_at_most_pow2(const BigInt& base, std::uint64_t exponent, std::uint64_t bits) {
  if (exponent == 0) {
    return true;
  }
  if (base <= 1) {
    return true;
  }
  // base >= 2, so each factor at least doubles the product; the loop runs at
  // most bits + 1 times before exceeding the limit.
  const BigInt limit = BigInt(1) << bits;
  BigInt product = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    product *= base;
    if (product > limit) {
      return false;
    }
  }
  return true;
}

std::uint64_t max_power_within_pow2(const BigInt& base, std::uint64_t bits) {
  if (base < 2) {
    throw std::invalid_argument("base must be at least 2");
  }
  const BigInt limit = BigInt(1) << bits;
  BigInt product = base;
  std::uint64_t q = 0;
  while (product <= limit) {
    ++q;
    product *= base;
  }
  return q;
}

}  // namespace maxlin
