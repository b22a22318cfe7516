#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace idri {

/// Exact rational number on 64-bit integers.
///
/// Values are kept normalized: positive denominator, numerator and
/// denominator coprime, zero stored as 0/1. Intermediate products run in
/// 128-bit arithmetic; a reduced result that does not fit in 64 bits
/// throws std::overflow_error. Constructing with a zero denominator
/// throws std::domain_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}
    Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "3/4", or plain "3" for integral values.
    std::string to_string() const;

    friend Rational operator-(const Rational& a) { return make(-i128(a.num_), a.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const i128 lhs = i128(a.num_) * b.den_;
        const i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    using i128 = __int128;
    static Rational make(i128 num, i128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Fixed-point decimal rendering with round-half-even ties, e.g.
/// to_decimal(Rational(5, 8), 4) == "0.6250". places must be in [0, 18].
std::string to_decimal(const Rational& value, int places);

/// value scaled by 100, rendered with round-half-even and a trailing
/// percent sign: to_percent(Rational(5, 8)) == "62.5%".
std::string to_percent(const Rational& value, int places = 1);

}  // namespace idri
