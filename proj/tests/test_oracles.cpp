#include <doctest.h>

#include "circle.hpp"
#include "oracles.hpp"

using namespace twopow;

namespace {

OracleDomain tiny() {
    return OracleDomain::from_params(circle_parameters(3, 3000, 15));
}

// quadruple-loop oracle for I1, no closed-form windows
u128 brute_i1(const OracleDomain& d) {
    u128 total = 0;
    for (u128 y1 = d.y.lo; y1 <= d.y.hi; ++y1)
        for (u128 y2 = d.y.lo; y2 <= d.y.hi; ++y2)
            for (long long z1 = 1; z1 <= d.z_max; ++z1)
                for (long long z2 = 1; z2 <= d.z_max; ++z2)
                    if (static_cast<i128>(checked_pow(y1, d.k)) -
                            static_cast<i128>(checked_pow(y2, d.k)) ==
                        static_cast<i128>(z1) - z2)
                        ++total;
    return total;
}

}  // namespace

TEST_CASE("I1 against a quadruple loop and the diagonal anchor") {
    OracleDomain d = tiny();
    u128 i1 = count_i1(d);
    CHECK(i1 == 105);  // (#y)(#z) = 7 * 15, diagonal-only
    CHECK(i1 == brute_i1(d));

    // wider domain anchor: y in 11..20, Z = 100, still diagonal-only
    OracleDomain wide;
    wide.k = 3;
    wide.y = IntRange{11, 20};
    wide.z_max = 100;
    CHECK(count_i1(wide) == 1000);

    // squeeze the y range until off-diagonal solutions appear:
    // k y_min^{k-1} = 3 no longer dominates Z = 10
    OracleDomain cross;
    cross.k = 3;
    cross.y = IntRange{1, 3};
    cross.z_max = 10;
    u128 got = count_i1(cross);
    CHECK(got > checked_mul(cross.y.count(), static_cast<u128>(cross.z_max)));
    CHECK(got == brute_i1(cross));
}

TEST_CASE("T equals the spectrum's sum of squares") {
    CircleParameters p = circle_parameters(3, 3000, 15);
    OracleDomain d = OracleDomain::from_params(p);
    SpectrumTable t = spectrum_full(p);
    CHECK(count_t(d) == t.sum_squares());
    CHECK(count_t(d) == 1190);
}

TEST_CASE("h substitution is an exact bijection") {
    SubstitutionCheck c = verify_h_substitution(tiny());
    CHECK(c.equal);
    CHECK(c.direct == c.substituted);
    CHECK(c.direct == 1190);

    // also on a deliberately cramped domain
    OracleDomain d;
    d.k = 4;
    d.x = IntRange{5, 9};
    d.y = IntRange{2, 4};
    d.z_max = 6;
    d.h_max = 4;  // |x1 - x2| <= 4 always holds here, so H = 4 suffices
    SubstitutionCheck c2 = verify_h_substitution(d);
    CHECK(c2.equal);
}

TEST_CASE("I2 dominated by the diagonal on the tiny instance") {
    OracleDomain d = tiny();
    I2Report r = count_i2(d.x, d.h_max, d.k);
    // every admissible (h, x) solves against itself
    CHECK(r.count >= r.admissible_pairs);
    CHECK(r.admissible_pairs == 45);  // sum over h of (10 - h), h <= 9
    // h Psi(x, h) = (x+h)^3 - x^3 is injective over this grid
    CHECK(r.count == r.admissible_pairs);
    CHECK(static_cast<double>(r.diagonal_ratio) == doctest::Approx(1.0));
}

TEST_CASE("I5 against a direct loop") {
    IntRange x{11, 16};
    long long h_max = 3, z_max = 5;
    u128 direct = 0;
    for (long long h = 1; h <= h_max; ++h)
        for (u128 x1 = x.lo; x1 + h <= x.hi; ++x1)
            for (u128 x2 = x.lo; x2 + h <= x.hi; ++x2)
                for (long long z1 = 1; z1 <= z_max; ++z1)
                    for (long long z2 = 1; z2 <= z_max; ++z2) {
                        i128 lhs = static_cast<i128>(h) *
                                   (psi(static_cast<i128>(x1), h, 3) -
                                    psi(static_cast<i128>(x2), h, 3));
                        if (lhs == static_cast<i128>(z1) - z2) ++direct;
                    }
    CHECK(count_i5(x, h_max, z_max, 3) == direct);
}

TEST_CASE("annihilation: inequality certified and count zero") {
    CircleParameters p = circle_parameters(3, 3000, 15);
    AnnihilationReport r = annihilation_check(p);
    CHECK(r.inequality_holds);
    CHECK(r.lhs == 7500);   // 3 * 25 * 10^2
    CHECK(r.rhs == 2544);   // floor((2Y)^3) + 15 = 2529 + 15
    CHECK(r.count == 0);

    // forcing a tiny H breaks the inequality and solutions appear
    AnnihilationReport weak = annihilation_check(p, 1);
    CHECK_FALSE(weak.inequality_holds);
    CHECK(weak.count > 0);
}
