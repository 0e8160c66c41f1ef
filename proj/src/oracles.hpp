#pragma once

#include <optional>

#include "exponents.hpp"
#include "int128.hpp"

namespace twopow {

// Enumeration ranges for the exact brute-force counters; endpoints are
// floored once via the dyadic_range convention.
struct OracleDomain {
    int k = 0;
    IntRange x;      // (X, 2X]
    IntRange y;      // (Y, 2Y]
    long long z_max = 0;   // z in [1, Z]
    long long h_max = 0;   // |h| <= H
    IntRange m;      // (Y^k, (2Y)^k]

    static OracleDomain from_params(const CircleParameters& p);
};

// solutions of y1^k - y2^k = z1 - z2; equals (#y)(#z) exactly whenever
// k (floor(Y)+1)^{k-1} > Z
u128 count_i1(const OracleDomain& d);

// solutions of x1^k - x2^k = y1^k - y2^k + z1 - z2
u128 count_t(const OracleDomain& d);

// solutions of h Psi(x, h) = y1^k - y2^k + z1 - z2 with |h| <= h_max and
// x, x + h both in the x-range
u128 count_t_substituted(const OracleDomain& d);

struct SubstitutionCheck {
    u128 direct = 0;
    u128 substituted = 0;
    bool equal = false;
};

SubstitutionCheck verify_h_substitution(const OracleDomain& d);

struct I2Report {
    u128 count = 0;
    u128 admissible_pairs = 0;  // (h, x) with 1 <= h <= H, x and x+h in range
    long double diagonal_ratio = 0;  // count / admissible_pairs
};

// solutions of h1 Psi(x1, h1) = h2 Psi(x2, h2)
I2Report count_i2(const IntRange& x, long long h_max, int k);

// solutions of h (Psi(x1, h) - Psi(x2, h)) = z1 - z2
u128 count_i5(const IntRange& x, long long h_max, long long z_max, int k);

struct AnnihilationReport {
    u128 count = 0;
    bool inequality_holds = false;  // k H X^{k-1} > (2Y)^k + Z, verified
    u128 lhs = 0;                   // k H floor(X)^{k-1} (integer form)
    u128 rhs = 0;                   // floor((2Y)^k) + Z
    long long h_used = 0;
};

// solutions of x1^k - x2^k = m1 - m2 + z1 - z2 with |x1 - x2| > H;
// zero whenever the verified inequality holds
AnnihilationReport annihilation_check(const CircleParameters& p,
                                      std::optional<long long> override_h = std::nullopt);

}  // namespace twopow
