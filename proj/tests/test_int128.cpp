#include <doctest.h>

#include "int128.hpp"
#include "rational.hpp"

using namespace twopow;

TEST_CASE("checked arithmetic raises on 128-bit overflow") {
    u128 big = ~static_cast<u128>(0);
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(static_cast<u128>(1) << 64, 2), std::overflow_error);
    CHECK(checked_pow(10, 38) == parse_u128("100000000000000000000000000000000000000"));
}

TEST_CASE("kth_root is the exact integer part") {
    for (int k = 2; k <= 7; ++k)
        for (u128 t = 1; t <= 200; ++t) {
            u128 n = checked_pow(t, k);
            CHECK(kth_root(n, k) == t);
            CHECK(kth_root(n - 1, k) == t - 1);
            CHECK(kth_root(n + 1, k) == t);
        }
    // near the top of the 128-bit range
    u128 t = (static_cast<u128>(1) << 42) - 3;
    CHECK(kth_root(checked_pow(t, 3), 3) == t);
    CHECK(kth_root(checked_pow(t, 3) - 1, 3) == t - 1);
}

TEST_CASE("decimal round trip for 128-bit values") {
    u128 v = parse_u128("170141183460469231731687303715884105727");  // 2^127 - 1
    CHECK(to_string(v) == "170141183460469231731687303715884105727");
    CHECK(parse_u128("0") == 0);
    CHECK_THROWS_AS(parse_u128("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_u128(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_u128("999999999999999999999999999999999999999"),
                    std::overflow_error);
}

TEST_CASE("dyadic range follows the floor convention") {
    IntRange r = dyadic_range(10.0L);
    CHECK(r.lo == 11);
    CHECK(r.hi == 20);
    CHECK(r.count() == 10);
    r = dyadic_range(6.5L);  // (6.5, 13] -> 7..13
    CHECK(r.lo == 7);
    CHECK(r.hi == 13);
    CHECK(r.count() == 7);
}

TEST_CASE("modular helpers") {
    CHECK(powmod_u64(3, 100, 101) == 1);  // Fermat
    CHECK(mulmod_u64(123456789012345ULL, 987654321098765ULL, 1000000007ULL) ==
          static_cast<std::uint64_t>((static_cast<u128>(123456789012345ULL) *
                                      987654321098765ULL) % 1000000007ULL));
}

TEST_CASE("rationals normalize and compare exactly") {
    Rational a{1, 2}, b{7, 18};
    CHECK((a * a).str() == "1/4");
    CHECK((Rational{1, 1} - Rational{2, 3} + Rational{1, 18} *
           (Rational{1, 1} - a)).str() == "13/36");
    CHECK(b < a);
    CHECK(Rational{4, 9}.str() == "4/9");
    CHECK(Rational{18, 9}.str() == "2");
    CHECK(Rational{-6, 4}.str() == "-3/2");
}
