#include "gaps.hpp"

#include <cmath>
#include <thread>
#include <vector>

namespace twopow {

u128 next_element_after(int k, u128 n) {
    if (n < 2) return 2;
    // greedy bound: some element lies within k^2 m^{phi_k} of any large m,
    // so a doubling margin terminates quickly
    long double phi = exponent_table(k).phi.value();
    u128 margin = 64 + 4 * static_cast<u128>(k) * k *
                           static_cast<u128>(powl(static_cast<long double>(n + 1), phi));
    while (true) {
        SumStream s(k, n + 1, checked_add(n, margin));
        if (auto v = s.next()) return v->value;
        margin = checked_mul(margin, 2);
    }
}

namespace {

struct SegmentSummary {
    bool any = false;
    u128 first = 0, last = 0;
    u128 count = 0;
    u128 sum_sq = 0;   // internal gaps only
    u128 max_gap = 0;
};

SegmentSummary scan_segment(int k, u128 lo, u128 hi) {
    SegmentSummary s;
    SumStream st(k, lo, hi);
    u128 prev = 0;
    while (auto v = st.next()) {
        if (!s.any) {
            s.any = true;
            s.first = v->value;
        } else {
            u128 g = v->value - prev;
            s.sum_sq += checked_mul(g, g);
            if (g > s.max_gap) s.max_gap = g;
        }
        prev = v->value;
        ++s.count;
    }
    s.last = prev;
    return s;
}

}  // namespace

GapReport gap_statistics(int k, u128 n1, u128 n2, int segments) {
    if (n1 < 2 || n2 < n1) throw std::domain_error("gap_statistics: need 2 <= n1 <= n2");
    if (segments < 1) throw std::domain_error("gap_statistics: segments must be >= 1");
    GapReport r;
    r.k = k;
    r.n1 = n1;
    r.n2 = n2;
    if (n1 == n2) return r;

    u128 span = n2 - n1;
    if (static_cast<u128>(segments) > span) segments = static_cast<int>(span);
    std::vector<SegmentSummary> parts(segments);
    std::vector<std::thread> workers;
    for (int i = 0; i < segments; ++i) {
        u128 a = n1 + span * static_cast<u128>(i) / segments;
        u128 b = n1 + span * static_cast<u128>(i + 1) / segments;
        workers.emplace_back([&, i, a, b] { parts[i] = scan_segment(k, a + 1, b); });
    }
    for (auto& w : workers) w.join();

    // deterministic merge: stitch boundary gaps in window order
    u128 prev = 0;
    bool have_prev = false;
    for (const SegmentSummary& s : parts) {
        if (!s.any) continue;
        if (have_prev) {
            u128 g = s.first - prev;
            r.sum_sq_gaps += checked_mul(g, g);
            if (g > r.max_gap) r.max_gap = g;
        }
        r.sum_sq_gaps += s.sum_sq;
        if (s.max_gap > r.max_gap) r.max_gap = s.max_gap;
        r.count += s.count;
        prev = s.last;
        have_prev = true;
    }
    if (have_prev) {
        u128 g = next_element_after(k, prev) - prev;  // overshoot gap
        r.sum_sq_gaps += checked_mul(g, g);
        if (g > r.max_gap) r.max_gap = g;
    }

    ExponentTable t = exponent_table(k);
    long double n2f = static_cast<long double>(n2);
    r.ratio_theta = static_cast<long double>(r.sum_sq_gaps) / powl(n2f, 1.0L + t.theta.value());
    r.ratio_conj = static_cast<long double>(r.sum_sq_gaps) / powl(n2f, 2.0L - 2.0L / k);
    r.ratio_max = static_cast<long double>(r.max_gap) / powl(n2f, t.phi.value());
    return r;
}

ExceptionalReport exceptional_count(int k, u128 n, u128 z) {
    if (n < 2) throw std::domain_error("exceptional_count: N must be >= 2");
    if (z < 1) throw std::domain_error("exceptional_count: Z must be >= 1");
    ExceptionalReport r;
    r.k = k;
    r.n = n;
    r.z = z;
    // n in (N, 2N] is covered iff some element s satisfies n < s <= n + Z,
    // i.e. s - Z <= n <= s - 1; sweep the sorted stream once
    u128 lo = n + 1, hi = 2 * n;
    u128 covered = 0;
    u128 cursor = lo;  // smallest n not yet decided
    SumStream st(k, lo, checked_add(hi, z));
    while (auto v = st.next()) {
        u128 s = v->value;
        u128 a = s > z ? s - z : 1;
        u128 b = s - 1;
        if (a < cursor) a = cursor;
        if (b > hi) b = hi;
        if (a <= b) {
            covered += b - a + 1;
            cursor = b + 1;
        }
        if (cursor > hi) break;
    }
    r.count = n - covered;
    r.density = static_cast<long double>(r.count) / static_cast<long double>(n);
    return r;
}

u128 xi(int k, u128 n, u128 z) {
    if (n < 4) throw std::domain_error("xi: N must be >= 4");
    if (z < 2) throw std::domain_error("xi: Z must be >= 2");
    u128 lo = n / 2 + 1;  // s > N/2
    u128 count = 0;
    u128 prev = 0;
    bool have_prev = false;
    SumStream st(k, lo, n);
    while (auto v = st.next()) {
        if (have_prev) {
            u128 g = v->value - prev;
            if (2 * g > z && g <= z) ++count;
        }
        prev = v->value;
        have_prev = true;
    }
    if (have_prev) {
        u128 g = next_element_after(k, prev) - prev;
        if (2 * g > z && g <= z) ++count;
    }
    return count;
}

GreedyResult greedy_representation(int k, u128 n) {
    if (n < 2) throw std::domain_error("greedy_representation: n must be >= 2");
    if (k < 3) throw std::domain_error("greedy_representation: k must be >= 3");
    GreedyResult r;
    r.x = kth_root(n - 1, k);  // leaves at least 1 for the second power
    u128 rest = n - checked_pow(r.x, k);
    r.y = kth_root(rest, k);
    r.remainder = rest - checked_pow(r.y, k);
    return r;
}

}  // namespace twopow
