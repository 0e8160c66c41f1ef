#include <doctest.h>

#include <cmath>

#include "exponents.hpp"

using namespace twopow;

TEST_CASE("exponent tables for small k") {
    ExponentTable t3 = exponent_table(3);
    CHECK(t3.sigma.str() == "1/2");
    CHECK(t3.theta.str() == "7/18");
    CHECK(t3.phi.str() == "4/9");

    ExponentTable t4 = exponent_table(4);
    CHECK(t4.sigma.str() == "1/4");
    CHECK(t4.phi.str() == "9/16");
    // theta = 1 - 2/k + (1-sigma)/k^2
    CHECK(t4.theta == Rational{1, 1} - Rational{2, 4} +
                          (Rational{1, 1} - t4.sigma) / Rational{16, 1});

    ExponentTable t7 = exponent_table(7);
    CHECK(t7.sigma.str() == "1/32");

    ExponentTable t8 = exponent_table(8);
    CHECK(t8.sigma == (Rational{1, 2 * 64 - 10 * 8 + 12}));
    CHECK(t8.sigma.str() == "1/60");

    CHECK_THROWS_AS(exponent_table(2), std::domain_error);
}

TEST_CASE("theta equals phi minus sigma over k squared for every k") {
    for (int k = 3; k <= 40; ++k) {
        ExponentTable t = exponent_table(k);
        CHECK(t.theta == t.phi - t.sigma / Rational{static_cast<long long>(k) *
                                                    static_cast<long long>(k), 1});
        CHECK(t.phi == Rational{(k - 1) * (k - 1), static_cast<long long>(k) * k});
        // ordering: 0 < theta < phi < 1
        CHECK(Rational{0, 1} < t.theta);
        CHECK(t.theta < t.phi);
        CHECK(t.phi < Rational{1, 1});
    }
}

TEST_CASE("circle parameters at the tiny instance") {
    CircleParameters p = circle_parameters(3, 3000, 15);
    CHECK(p.x == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(p.x_range().lo == 11);
    CHECK(p.x_range().hi == 20);
    CHECK(p.y_range().lo == 7);
    CHECK(p.y_range().hi == 13);
    CHECK(p.h_int() == 25);  // H = 2^3 * 10^{1/2} = 25.29...
    CHECK(p.q_int() == 6);   // Q = 10^{5/6} = 6.81...
    CHECK(p.y == doctest::Approx(std::pow(10.0, 5.0 / 6.0)).epsilon(1e-12));
}

TEST_CASE("Z admissibility flags") {
    // lower bound X^{k theta} with X = 10, k=3: 10^{7/6} = 14.67...
    CHECK(circle_parameters(3, 3000, 15).z_flag == ZFlag::admissible);
    CHECK(circle_parameters(3, 3000, 14).z_flag == ZFlag::below_lower);
    // upper bound 6 k^2 X^{k-2+1/k} = 54 * 10^{4/3} = 1163.3...
    CHECK(circle_parameters(3, 3000, 1163).z_flag == ZFlag::admissible);
    CHECK(circle_parameters(3, 3000, 1164).z_flag == ZFlag::above_upper);
    CHECK_THROWS_AS(circle_parameters(3, 3000, 0), std::domain_error);
    CHECK_THROWS_AS(circle_parameters(3, 0, 15), std::domain_error);
}
