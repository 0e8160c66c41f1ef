#include "exponents.hpp"

#include <cmath>

namespace twopow {

ExponentTable exponent_table(int k) {
    if (k < 3) throw std::domain_error("exponent_table: k must be >= 3");
    ExponentTable t;
    t.k = k;
    if (k <= 7) {
        t.sigma = Rational(1, 1LL << (k - 2));
    } else {
        t.sigma = Rational(1, 2LL * k * k - 10LL * k + 12);
    }
    Rational one(1), two(2), kk(k);
    t.phi = (one - one / kk) * (one - one / kk);
    t.theta = one - two / kk + (one - t.sigma) / (kk * kk);
    return t;
}

const char* z_flag_name(ZFlag f) {
    switch (f) {
        case ZFlag::admissible: return "admissible";
        case ZFlag::below_lower: return "below_lower";
        case ZFlag::above_upper: return "above_upper";
    }
    return "?";
}

CircleParameters circle_parameters(int k, long double n, long long z) {
    ExponentTable t = exponent_table(k);
    if (!(n > 0)) throw std::domain_error("circle_parameters: N must be positive");
    if (z <= 0) throw std::domain_error("circle_parameters: Z must be positive");
    CircleParameters p;
    p.k = k;
    p.n = n;
    p.z = z;
    long double sigma = t.sigma.value();
    p.x = powl(n / 3.0L, 1.0L / k);
    p.y = powl(p.x, 1.0L - (1.0L - sigma) / k);
    p.h = powl(2.0L, static_cast<long double>(k)) * powl(p.x, sigma);
    p.q = powl(p.x, 1.0L - sigma / k);
    p.z_lower = powl(p.x, k * t.theta.value());
    p.z_upper = 6.0L * k * k * powl(p.x, k - 2 + 1.0L / k);
    long double zf = static_cast<long double>(z);
    if (zf < p.z_lower) p.z_flag = ZFlag::below_lower;
    else if (zf > p.z_upper) p.z_flag = ZFlag::above_upper;
    else p.z_flag = ZFlag::admissible;
    return p;
}

}  // namespace twopow
