#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "int128.hpp"

namespace twopow {

// Exact rational with 64-bit numerator/denominator and 128-bit intermediates.
// Plenty for the exponents sigma_k, theta_k, phi_k (denominators stay below
// 2^25 for k <= 64).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rational from_i128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        Rational r;
        r.num = static_cast<long long>(n);
        r.den = static_cast<long long>(d);
        if (r.num == 0) r.den = 1;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<i128>(a.num) * b.num,
                         static_cast<i128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return from_i128(static_cast<i128>(a.num) * b.den,
                         static_cast<i128>(a.den) * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a == b || a < b;
    }

    long double value() const {
        return static_cast<long double>(num) / static_cast<long double>(den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace twopow
