#include "alpha.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twopow {

namespace {

u128 fixed_from_fraction(std::uint64_t a, std::uint64_t q) {
    // floor(a * 2^128 / q), base-2^64 long division; a < q
    u128 top = static_cast<u128>(a) << 64;
    u128 hi = top / q;
    u128 rem = top % q;
    u128 lo = (rem << 64) / q;
    return (hi << 64) | lo;
}

}  // namespace

Alpha Alpha::from_fixed(u128 fixed) {
    Alpha al;
    al.fixed_ = fixed;
    return al;
}

Alpha Alpha::from_rational(std::uint64_t a, std::uint64_t q) {
    if (q == 0) throw std::domain_error("Alpha: zero denominator");
    a %= q;
    std::uint64_t g = std::gcd(a, q);
    if (g > 1) { a /= g; q /= g; }
    Alpha al;
    al.rational_ = true;
    al.num_ = a;
    al.den_ = q;
    al.fixed_ = fixed_from_fraction(a, q);
    return al;
}

Alpha Alpha::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Alpha: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::uint64_t a = std::stoull(text.substr(0, slash));
        std::uint64_t q = std::stoull(text.substr(slash + 1));
        return from_rational(a, q);
    }
    std::string s = text;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    std::string frac = dot == std::string::npos ? "" : s.substr(dot + 1);
    std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    for (char c : ip + frac)
        if (c < '0' || c > '9') throw std::invalid_argument("Alpha: bad number: " + text);
    if (frac.size() > 18)
        throw std::invalid_argument("Alpha: at most 18 fractional digits supported");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::uint64_t num = frac.empty() ? 0 : std::stoull(frac);
    if (neg && num != 0) num = den - num;  // reduce mod 1
    return from_rational(num, den);
}

long double Alpha::value() const {
    if (rational_) return static_cast<long double>(num_) / static_cast<long double>(den_);
    return ldexpl(static_cast<long double>(fixed_), -128);
}

long double Alpha::phase_times(u128 m) const {
    if (rational_) {
        u128 mm = m % den_;
        u128 r = (static_cast<u128>(num_) * mm) % den_;
        return static_cast<long double>(r) / static_cast<long double>(den_);
    }
    u128 p = fixed_ * m;  // wraps mod 2^128 by definition
    return ldexpl(static_cast<long double>(p), -128);
}

long double Alpha::distance_to_int() const {
    long double v = value();
    return fminl(v, 1.0L - v);
}

std::complex<long double> unit_phase(long double t) {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    long double a = two_pi * t;
    return {cosl(a), sinl(a)};
}

}  // namespace twopow
