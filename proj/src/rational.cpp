#include "idri/rational.hpp"

#include <limits>

namespace idri {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string u128_to_string(u128 value) {
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits += char('0' + int(value % 10));
        value /= 10;
    }
    return {digits.rbegin(), digits.rend()};
}

u128 pow10(int exponent) {
    u128 result = 1;
    for (int i = 0; i < exponent; ++i) result *= 10;
    return result;
}

}  // namespace

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const u128 g = gcd128(num < 0 ? u128(-num) : u128(num), u128(den));
    if (g > 1) {
        num /= i128(g);
        den /= i128(g);
    }
    constexpr i128 max64 = std::numeric_limits<std::int64_t>::max();
    constexpr i128 min64 = std::numeric_limits<std::int64_t>::min();
    if (num > max64 || num < min64 || den > max64)
        throw std::overflow_error("rational does not fit in 64 bits");
    Rational r;
    r.num_ = std::int64_t(num);
    r.den_ = std::int64_t(den);
    return r;
}

std::string Rational::to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

std::string to_decimal(const Rational& value, int places) {
    if (places < 0 || places > 18) throw std::invalid_argument("decimal places must be in [0, 18]");
    const bool negative = value.is_negative();
    const u128 num = negative ? u128(-__int128(value.num())) : u128(value.num());
    const u128 den = u128(value.den());
    const u128 scaled = num * pow10(places);
    u128 quotient = scaled / den;
    const u128 remainder = scaled % den;
    const u128 twice = remainder * 2;
    if (twice > den || (twice == den && (quotient & 1) != 0)) ++quotient;

    std::string digits = u128_to_string(quotient);
    if (int(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (negative && quotient != 0) out += '-';
    out.append(digits, 0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out.append(digits, digits.size() - places, places);
    }
    return out;
}

std::string to_percent(const Rational& value, int places) {
    return to_decimal(value * Rational(100), places) + "%";
}

}  // namespace idri
