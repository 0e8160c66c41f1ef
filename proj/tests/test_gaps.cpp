#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaps.hpp"

using namespace twopow;

namespace {

// ordered sequence elements up to hi, by brute force
std::vector<u128> sequence(int k, u128 hi) {
    std::vector<u128> out;
    SumStream s(k, 2, hi);
    while (auto v = s.next()) out.push_back(v->value);
    return out;
}

}  // namespace

TEST_CASE("gap report anchor and brute-force agreement") {
    GapReport r = gap_statistics(3, 100, 200);
    CHECK(r.count == 5);          // 126, 128, 133, 152, 189
    CHECK(r.sum_sq_gaps == 2543); // 2^2+5^2+19^2+37^2+28^2 (overshoot to 217)
    CHECK(r.max_gap == 37);

    auto seq = sequence(3, 400);
    u128 count = 0, sum_sq = 0, max_gap = 0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] <= 100 || seq[i] > 200) continue;
        u128 g = seq[i + 1] - seq[i];
        ++count;
        sum_sq += g * g;
        if (g > max_gap) max_gap = g;
    }
    CHECK(r.count == count);
    CHECK(r.sum_sq_gaps == sum_sq);
    CHECK(r.max_gap == max_gap);
}

TEST_CASE("segmented scans merge to identical reports") {
    GapReport a = gap_statistics(3, 50, 30000, 1);
    for (int segs : {2, 3, 8, 13}) {
        GapReport b = gap_statistics(3, 50, 30000, segs);
        CHECK(a.count == b.count);
        CHECK(a.sum_sq_gaps == b.sum_sq_gaps);
        CHECK(a.max_gap == b.max_gap);
    }
}

TEST_CASE("exceptional count anchor and brute force") {
    ExceptionalReport r = exceptional_count(3, 100, 10);
    CHECK(r.count == 63);
    CHECK(static_cast<double>(r.density) == doctest::Approx(0.63));

    // brute force: n in (100, 200] with no element in (n, n+10]
    auto seq = sequence(3, 300);
    u128 expected = 0;
    for (u128 n = 101; n <= 200; ++n) {
        bool hit = false;
        for (u128 s : seq)
            if (s > n && s <= n + 10) hit = true;
        if (!hit) ++expected;
    }
    CHECK(r.count == expected);
}

TEST_CASE("exceptional count vanishes once Z clears the greedy bound") {
    // Z = ceil(2 k^2 N^{phi_k})
    for (u128 n : {1000u, 10000u}) {
        long double z = ceill(18.0L * powl(static_cast<long double>(n), 4.0L / 9.0L));
        ExceptionalReport r = exceptional_count(3, n, static_cast<u128>(z));
        CHECK(r.count == 0);
    }
}

TEST_CASE("xi against brute force") {
    auto seq = sequence(3, 4000);
    for (u128 n : {500u, 1000u, 2000u}) {
        for (u128 z : {10u, 30u, 100u}) {
            u128 expected = 0;
            for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
                if (2 * seq[i] <= n || seq[i] > n) continue;
                u128 g = seq[i + 1] - seq[i];
                if (2 * g > z && g <= z) ++expected;
            }
            CHECK(xi(3, n, z) == expected);
        }
    }
}

TEST_CASE("greedy representation and its remainder bound") {
    GreedyResult g = greedy_representation(3, 1000000);
    CHECK(g.x == 99);   // 99^3 = 970299 is the largest cube <= 999999
    CHECK(g.y == 30);   // 30^3 = 27000 <= 29701
    CHECK(g.remainder == 2701);
    CHECK(checked_pow(g.x, 3) + checked_pow(g.y, 3) + g.remainder == 1000000);

    for (int k : {3, 4, 5})
        for (u128 n = 3000; n <= 20000; n += 977) {
            GreedyResult r = greedy_representation(k, n);
            CHECK(checked_pow(r.x, k) + checked_pow(r.y, k) + r.remainder == n);
            long double bound = static_cast<long double>(k) * k *
                                powl(static_cast<long double>(n),
                                     static_cast<long double>(
                                         exponent_table(k).phi.value()));
            CHECK(static_cast<long double>(r.remainder) <= bound);
        }
}

TEST_CASE("next_element_after returns the immediate successor") {
    auto seq = sequence(3, 3000);
    for (u128 n = 1; n <= 2500; n += 7) {
        u128 got = next_element_after(3, n);
        u128 expected = 0;
        for (u128 s : seq)
            if (s > n) { expected = s; break; }
        CHECK(got == expected);
    }
    CHECK(next_element_after(3, 1) == 2);
    CHECK(next_element_after(3, 2) == 9);
}
