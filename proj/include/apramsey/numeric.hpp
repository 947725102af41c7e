#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace apramsey {

// Exact arithmetic substrate. Every quantity that can leave the 64-bit
// envelope (witness coefficients, certificate data) lives in cpp_int /
// cpp_rational; there is no floating point anywhere in this library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floored division, m >= 1: rounds toward -inf, so floor_div(-1, 3) == -1.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t m) {
    std::int64_t q = n / m;
    return (n % m != 0 && n < 0) ? q - 1 : q;
}

// n mod m in [0, m), consistent with floor_div.
constexpr std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
    std::int64_t r = n % m;
    return r < 0 ? r + m : r;
}

BigInt floor_div(const BigInt& n, const BigInt& m);
BigInt mod_floor(const BigInt& n, const BigInt& m);

BigInt floor_rational(const Rational& x);
bool is_integer(const Rational& x);

// Unique x in [1, n-1] with a*x == 1 (mod n); requires n >= 2 and
// gcd(a, n) == 1, otherwise NotCoprime / ParameterOutOfRange.
BigInt mod_inverse(const BigInt& a, const BigInt& n);

// Parses "a", "-a", or "a/b" with b > 0.
Rational parse_rational(const std::string& text);

// "n" when integral, "n/d" otherwise (lowest terms, positive denominator).
std::string to_string(const Rational& x);

}  // namespace apramsey
