#include "int128.hpp"

#include <cmath>

namespace twopow {

u128 kth_root(u128 n, int k) {
    if (k < 1) throw std::domain_error("kth_root: k must be >= 1");
    if (n == 0) return 0;
    if (k == 1) return n;
    long double seed = powl(static_cast<long double>(n), 1.0L / k);
    u128 r = static_cast<u128>(seed);
    if (r > 2) r -= 2;
    else r = 1;
    // walk up until r^k > n, then step back
    while (true) {
        u128 p;
        bool over = false;
        p = 1;
        for (int i = 0; i < k && !over; ++i) {
            if (__builtin_mul_overflow(p, r + 1, &p)) over = true;
        }
        if (over || p > n) break;
        ++r;
    }
    return r;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return std::string(s.rbegin(), s.rend());
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(static_cast<u128>(-v));
    return to_string(static_cast<u128>(v));
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_u128: empty string");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_u128: not a decimal integer: " + s);
        v = checked_add(checked_mul(v, 10), static_cast<u128>(c - '0'));
    }
    return v;
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, mod);
        base = mulmod_u64(base, base, mod);
        exp >>= 1;
    }
    return r;
}

IntRange dyadic_range(long double p) {
    if (!(p > 0))
        throw std::domain_error("dyadic_range: endpoint must be positive");
    IntRange r;
    r.lo = static_cast<u128>(floorl(p)) + 1;
    r.hi = static_cast<u128>(floorl(2 * p));
    return r;
}

}  // namespace twopow
