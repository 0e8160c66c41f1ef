#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twopow {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr u128 u128_max() { return ~static_cast<u128>(0); }

inline u128 checked_mul(u128 a, u128 b) {
    u128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("128-bit multiplication overflow");
    return r;
}

inline u128 checked_add(u128 a, u128 b) {
    u128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("128-bit addition overflow");
    return r;
}

// t^k with overflow detection.
inline u128 checked_pow(u128 t, int k) {
    u128 r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, t);
    return r;
}

// Largest r with r^k <= n, exact. Floating seed, integer correction.
u128 kth_root(u128 n, int k);

std::string to_string(u128 v);
std::string to_string(i128 v);
u128 parse_u128(const std::string& s);

// (a*b) mod m for a,b < 2^64.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Integer range semantics for a real endpoint P: "P < t <= 2P" means
// t in {floor(P)+1, ..., floor(2P)}.
struct IntRange {
    u128 lo = 1;  // inclusive
    u128 hi = 0;  // inclusive; lo > hi means empty
    bool empty() const { return lo > hi; }
    u128 count() const { return empty() ? 0 : hi - lo + 1; }
};

IntRange dyadic_range(long double p);

}  // namespace twopow
