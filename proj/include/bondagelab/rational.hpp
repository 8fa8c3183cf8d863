#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bondagelab {

/// Exact rational number with a normalized int64 numerator/denominator pair.
/// The denominator is always positive and gcd(num, den) == 1. Arithmetic
/// that would overflow int64 throws std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const std::int64_t da = b.den_ / g;
        const std::int64_t db = a.den_ / g;
        return Rational(add(mul(a.num_, da), mul(b.num_, db)), mul(a.den_, da));
    }
    friend Rational operator-(const Rational& a) { return Rational(mul(a.num_, -1), a.den_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const std::int64_t s1 = g1 == 0 ? 1 : g1;
        const std::int64_t s2 = g2 == 0 ? 1 : g2;
        return Rational(mul(a.num_ / s1, b.num_ / s2), mul(a.den_ / s2, b.den_ / s1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    bool is_negative() const noexcept { return num_ < 0; }

    /// Always "p/q", integers included ("-12/1").
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    void normalize() {
        if (den_ < 0) {
            num_ = mul(num_, -1);
            den_ = mul(den_, -1);
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace bondagelab
