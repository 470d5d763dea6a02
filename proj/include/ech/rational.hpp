#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ech {

// Exact non-negative rational, always stored reduced with den > 0.
// Used for matching densities (delta) and growth factors, so that
// acceptance checks never go through floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        // reduce cross-wise first to keep intermediates small
        const std::int64_t g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        const std::int64_t g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }

    // smallest integer >= num/den, for non-negative values
    std::int64_t ceil_value() const {
        if (num < 0) throw std::domain_error("rational: ceil of negative");
        return (num + den - 1) / den;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    // accepts "p/q" or a bare integer "p"
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s), 1);
            return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("rational: cannot parse '" + s + "'");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational: value out of range in '" + s + "'");
        }
    }
};

}  // namespace ech
