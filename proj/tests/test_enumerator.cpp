#include <doctest.h>

#include <cmath>
#include <map>

#include "enumerator.hpp"

using namespace twopow;

namespace {

// independent double-loop oracle: value -> unordered representation count
std::map<u128, long long> brute(int k, u128 lo, u128 hi) {
    std::map<u128, long long> out;
    for (u128 x = 1;; ++x) {
        u128 xk = checked_pow(x, k);
        if (xk > hi - xk) break;
        for (u128 y = x;; ++y) {
            u128 s = xk + checked_pow(y, k);
            if (s > hi) break;
            if (s >= lo) ++out[s];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("stream equals the brute-force oracle, values and counts") {
    for (int k : {3, 4, 5, 7}) {
        auto oracle = brute(k, 2, 20000);
        SumStream s(k, 2, 20000);
        auto it = oracle.begin();
        while (auto v = s.next()) {
            REQUIRE(it != oracle.end());
            CHECK(v->value == it->first);
            CHECK(v->reps == it->second);
            CHECK(checked_pow(v->x, k) + checked_pow(v->y, k) == v->value);
            CHECK(v->x <= v->y);
            ++it;
        }
        CHECK(it == oracle.end());
    }
}

TEST_CASE("stream respects the window [lo, hi]") {
    SumStream s(3, 1000, 2000);
    u128 prev = 0;
    while (auto v = s.next()) {
        CHECK(v->value >= 1000);
        CHECK(v->value <= 2000);
        CHECK(v->value > prev);  // strictly increasing, duplicate-free
        prev = v->value;
    }
}

TEST_CASE("taxicab number carries two representations") {
    SumStream s(3, 1729, 1729);
    auto v = s.next();
    REQUIRE(v.has_value());
    CHECK(v->value == 1729);
    CHECK(v->reps == 2);
    CHECK(v->x == 1);  // witness with the smallest x: 1^3 + 12^3
    CHECK(v->y == 12);
    CHECK_FALSE(s.next().has_value());
}

TEST_CASE("frontier stays within floor(hi^{1/k}) + 1") {
    SumStream s(3, 2, 100000);
    std::size_t bound = static_cast<std::size_t>(kth_root(100000, 3)) + 1;
    while (s.next()) CHECK(s.frontier_size() <= bound);
}

TEST_CASE("checkpoint round trip resumes exactly") {
    SumStream full(3, 2, 50000);
    SumStream part(3, 2, 50000);
    for (int i = 0; i < 500; ++i) {
        auto v = part.next();
        auto w = full.next();
        REQUIRE(v.has_value());
        CHECK(v->value == w->value);
    }
    std::string cp = part.checkpoint();
    SumStream resumed = SumStream::from_checkpoint(cp, 50000);
    while (auto w = full.next()) {
        auto v = resumed.next();
        REQUIRE(v.has_value());
        CHECK(v->value == w->value);
        CHECK(v->reps == w->reps);
        CHECK(v->x == w->x);
        CHECK(v->y == w->y);
    }
    CHECK_FALSE(resumed.next().has_value());
}

TEST_CASE("checkpoint of an exhausted stream stays exhausted") {
    SumStream s(3, 2, 100);
    while (s.next()) {}
    SumStream r = SumStream::from_checkpoint(s.checkpoint(), 100);
    CHECK_FALSE(r.next().has_value());
}

TEST_CASE("malformed checkpoints are rejected") {
    CHECK_THROWS_AS(SumStream::from_checkpoint("{]", 100), std::invalid_argument);
    CHECK_THROWS_AS(SumStream::from_checkpoint("{\"version\":1}", 100),
                    std::invalid_argument);
    SumStream s(4, 2, 1000);
    s.next();
    std::string cp = s.checkpoint();
    // k below the supported range
    std::string bad = cp;
    bad.replace(bad.find("\"k\":4"), 5, "\"k\":2");
    CHECK_THROWS_AS(SumStream::from_checkpoint(bad, 1000), std::invalid_argument);
    // corrupt row: x below y
    std::string swapped = cp;
    auto xpos = swapped.find("\"x\":\"");
    REQUIRE(xpos != std::string::npos);
    swapped.replace(xpos + 5, swapped.find('"', xpos + 5) - xpos - 5, "0");
    CHECK_THROWS_AS(SumStream::from_checkpoint(swapped, 1000),
                    std::invalid_argument);
}

TEST_CASE("stream rejects bad domains") {
    CHECK_THROWS_AS(SumStream(2, 2, 100), std::domain_error);
    CHECK_THROWS_AS(SumStream(3, 100, 2), std::domain_error);
}

TEST_CASE("nu counts distinct values and pairs") {
    NuResult r = nu(3, 10000);
    CHECK(r.distinct == 202);
    CHECK(r.pairs == 204);  // 1729 and 4104 are doubly represented
    // cross-check against the oracle map
    auto oracle = brute(3, 2, 10000);
    u128 pairs = 0;
    for (auto& [v, c] : oracle) pairs += static_cast<u128>(c);
    CHECK(r.distinct == oracle.size());
    CHECK(r.pairs == pairs);
}

TEST_CASE("main term against independently computed gamma constants") {
    // Gamma(1+1/h)^2 / (2 Gamma(1+2/h)), frozen at 30 digits from an
    // arbitrary-precision evaluation
    CHECK(static_cast<double>(nu_main_term(3, 1)) ==
          doctest::Approx(0.441659687571362489).epsilon(1e-15));
    CHECK(static_cast<double>(nu_main_term(4, 1)) ==
          doctest::Approx(0.463518669325342980).epsilon(1e-15));
    // anchor at N = 10^4
    CHECK(static_cast<double>(nu_main_term(3, 10000)) ==
          doctest::Approx(205.000267).epsilon(1e-6));
    // N^{2/h} scaling
    CHECK(static_cast<double>(nu_main_term(4, 1e8) / nu_main_term(4, 1)) ==
          doctest::Approx(1e4).epsilon(1e-12));
    CHECK_THROWS_AS(nu_main_term(2, 1000), std::domain_error);
}

TEST_CASE("is_sum returns the lexicographically smallest witness") {
    auto w = is_sum(3, 1729);
    REQUIRE(w.has_value());
    CHECK(w->first == 1);
    CHECK(w->second == 12);
    CHECK_FALSE(is_sum(3, 1730).has_value());
    CHECK_FALSE(is_sum(3, 3).has_value());
    CHECK_THROWS_AS(is_sum(3, 1), std::domain_error);
    auto v = is_sum(5, 33);  // 1^5 + 2^5
    REQUIRE(v.has_value());
    CHECK(v->first == 1);
    CHECK(v->second == 2);
}
