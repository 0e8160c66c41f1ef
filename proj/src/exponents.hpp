#pragma once

#include <cmath>
#include <string>

#include "int128.hpp"
#include "rational.hpp"

namespace twopow {

// sigma_k = 2^{2-k} for 3 <= k <= 7, 1/(2k^2-10k+12) for k >= 8;
// theta_k = 1 - 2/k + (1-sigma_k)/k^2 = phi_k - sigma_k/k^2;
// phi_k = (1-1/k)^2.
struct ExponentTable {
    int k = 0;
    Rational sigma;
    Rational theta;
    Rational phi;
};

ExponentTable exponent_table(int k);

enum class ZFlag { admissible, below_lower, above_upper };

const char* z_flag_name(ZFlag f);

// X = (N/3)^{1/k}, Y = X^{1-(1-sigma)/k}, H = 2^k X^sigma, Q = X^{1-sigma/k}.
// Real parameters carry a 64-bit mantissa (x86 long double); the derived
// integer ranges follow the floor convention of dyadic_range.
struct CircleParameters {
    int k = 0;
    long double n = 0;
    long double x = 0;
    long double y = 0;
    long double h = 0;
    long double q = 0;
    long long z = 0;
    ZFlag z_flag = ZFlag::admissible;
    long double z_lower = 0;  // X^{k theta}
    long double z_upper = 0;  // 6 k^2 X^{k-2+1/k}

    IntRange x_range() const { return dyadic_range(x); }
    IntRange y_range() const { return dyadic_range(y); }
    long long h_int() const { return static_cast<long long>(floorl(h)); }
    long long q_int() const { return static_cast<long long>(floorl(q)); }
};

CircleParameters circle_parameters(int k, long double n, long long z);

}  // namespace twopow
