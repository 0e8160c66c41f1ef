#include "oracles.hpp"

#include "circle.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace twopow {

namespace {

// #(z1, z2) in [1, Z]^2 with z1 - z2 = delta
u128 z_window(i128 delta, long long z_max) {
    i128 d = delta < 0 ? -delta : delta;
    if (d >= z_max) return 0;
    return static_cast<u128>(z_max - d);
}

// #(m1, m2) in a contiguous range of size count with m1 - m2 = delta
u128 range_window(i128 delta, u128 count) {
    i128 d = delta < 0 ? -delta : delta;
    if (static_cast<u128>(d) >= count) return 0;
    return count - static_cast<u128>(d);
}

std::vector<i128> power_list(const IntRange& r, int k) {
    std::vector<i128> v;
    for (u128 t = r.lo; t <= r.hi; ++t)
        v.push_back(static_cast<i128>(checked_pow(t, k)));
    return v;
}

// distinct k-th power differences t1^k - t2^k over a range, with counts
std::map<i128, u128> diff_histogram(const IntRange& r, int k) {
    std::vector<i128> p = power_list(r, k);
    std::map<i128, u128> h;
    for (i128 a : p)
        for (i128 b : p) ++h[a - b];
    return h;
}

}  // namespace

OracleDomain OracleDomain::from_params(const CircleParameters& p) {
    OracleDomain d;
    d.k = p.k;
    d.x = p.x_range();
    d.y = p.y_range();
    d.z_max = p.z;
    d.h_max = p.h_int();
    long double yk = powl(p.y, p.k);
    long double yk2 = powl(2 * p.y, p.k);
    d.m.lo = static_cast<u128>(floorl(yk)) + 1;
    d.m.hi = static_cast<u128>(floorl(yk2));
    return d;
}

u128 count_i1(const OracleDomain& d) {
    u128 total = 0;
    std::vector<i128> p = power_list(d.y, d.k);
    for (i128 a : p)
        for (i128 b : p) total += z_window(a - b, d.z_max);
    return total;
}

u128 count_t(const OracleDomain& d) {
    std::map<i128, u128> ydiff = diff_histogram(d.y, d.k);
    std::vector<i128> xp = power_list(d.x, d.k);
    u128 total = 0;
    for (i128 a : xp)
        for (i128 b : xp) {
            i128 dx = a - b;
            for (const auto& [dy, c] : ydiff)
                total += c * z_window(dx - dy, d.z_max);
        }
    return total;
}

u128 count_t_substituted(const OracleDomain& d) {
    std::map<i128, u128> ydiff = diff_histogram(d.y, d.k);
    u128 total = 0;
    i128 lo = static_cast<i128>(d.x.lo), hi = static_cast<i128>(d.x.hi);
    for (long long h = -d.h_max; h <= d.h_max; ++h) {
        for (i128 x = lo; x <= hi; ++x) {
            i128 x1 = x + h;
            if (x1 < lo || x1 > hi) continue;
            i128 lhs = static_cast<i128>(h) * psi(x, h, d.k);  // (x+h)^k - x^k
            for (const auto& [dy, c] : ydiff)
                total += c * z_window(lhs - dy, d.z_max);
        }
    }
    return total;
}

SubstitutionCheck verify_h_substitution(const OracleDomain& d) {
    SubstitutionCheck c;
    c.direct = count_t(d);
    c.substituted = count_t_substituted(d);
    c.equal = c.direct == c.substituted;
    return c;
}

I2Report count_i2(const IntRange& x, long long h_max, int k) {
    I2Report rep;
    std::map<i128, u128> values;
    for (long long h = 1; h <= h_max; ++h)
        for (u128 t = x.lo; t + static_cast<u128>(h) <= x.hi; ++t) {
            i128 v = static_cast<i128>(h) * psi(static_cast<i128>(t), h, k);
            ++values[v];
            ++rep.admissible_pairs;
        }
    for (const auto& [v, c] : values) rep.count += c * c;
    if (rep.admissible_pairs > 0)
        rep.diagonal_ratio = static_cast<long double>(rep.count) /
                             static_cast<long double>(rep.admissible_pairs);
    return rep;
}

u128 count_i5(const IntRange& x, long long h_max, long long z_max, int k) {
    u128 total = 0;
    for (long long h = 1; h <= h_max; ++h) {
        std::vector<i128> vals;  // h Psi(x, h) over admissible x
        for (u128 t = x.lo; t + static_cast<u128>(h) <= x.hi; ++t)
            vals.push_back(static_cast<i128>(h) * psi(static_cast<i128>(t), h, k));
        for (i128 a : vals)
            for (i128 b : vals) total += z_window(a - b, z_max);
    }
    return total;
}

AnnihilationReport annihilation_check(const CircleParameters& p,
                                      std::optional<long long> override_h) {
    AnnihilationReport rep;
    OracleDomain d = OracleDomain::from_params(p);
    rep.h_used = override_h.value_or(d.h_max);
    u128 xk1 = checked_pow(static_cast<u128>(floorl(p.x)), p.k - 1);
    rep.lhs = checked_mul(checked_mul(static_cast<u128>(p.k),
                                      static_cast<u128>(rep.h_used)), xk1);
    rep.rhs = checked_add(d.m.hi, static_cast<u128>(p.z));
    rep.inequality_holds = rep.lhs > rep.rhs;

    u128 m_count = d.m.count();
    std::vector<i128> xp = power_list(d.x, p.k);
    std::size_t nx = xp.size();
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nx; ++j) {
            i128 sep = static_cast<i128>(i) - static_cast<i128>(j);
            if (sep < 0) sep = -sep;
            if (sep <= rep.h_used) continue;  // only |x1 - x2| > H
            i128 big = xp[i] - xp[j];
            for (long long dz = -(d.z_max - 1); dz <= d.z_max - 1; ++dz)
                rep.count += range_window(big - dz, m_count) * z_window(dz, d.z_max);
        }
    return rep;
}

}  // namespace twopow
