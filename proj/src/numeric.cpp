#include "apramsey/numeric.hpp"

#include "apramsey/errors.hpp"

#include <sstream>
#include <utility>

namespace apramsey {

BigInt floor_div(const BigInt& n, const BigInt& m) {
    if (m <= 0) throw ParameterOutOfRange("floor_div: modulus must be positive");
    BigInt q = n / m;  // cpp_int division truncates toward zero
    if (n % m != 0 && n < 0) --q;
    return q;
}

BigInt mod_floor(const BigInt& n, const BigInt& m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r;
}

BigInt floor_rational(const Rational& x) {
    return floor_div(numerator(x), denominator(x));
}

bool is_integer(const Rational& x) {
    return denominator(x) == 1;
}

BigInt mod_inverse(const BigInt& a, const BigInt& n) {
    if (n < 2) throw ParameterOutOfRange("mod_inverse: modulus must be at least 2");
    // extended Euclid on (a mod n, n)
    BigInt r0 = mod_floor(a, n), r1 = n;
    BigInt s0 = 1, s1 = 0;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw NotCoprime("mod_inverse: arguments are not coprime");
    return mod_floor(s0, n);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den <= 0) throw ParameterOutOfRange("rational denominator must be positive");
        return Rational(num, den);
    } catch (const ParameterOutOfRange&) {
        throw;
    } catch (const std::exception&) {
        throw ParameterOutOfRange("cannot parse rational: " + text);
    }
}

std::string to_string(const Rational& x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

}  // namespace apramsey
