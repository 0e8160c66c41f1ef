#pragma once

#include "enumerator.hpp"
#include "exponents.hpp"
#include "int128.hpp"

namespace twopow {

// Gap statistics of s_n in (n1, n2]; the gap attached to the last element
// uses the first sequence element beyond n2 (the scan overshoots by one).
struct GapReport {
    int k = 0;
    u128 n1 = 0, n2 = 0;
    u128 count = 0;        // elements s_n in (n1, n2]
    u128 max_gap = 0;
    u128 sum_sq_gaps = 0;  // Sum over those s_n of (s_{n+1} - s_n)^2
    long double ratio_theta = 0;  // sum_sq / n2^{1+theta_k}
    long double ratio_conj = 0;   // sum_sq / n2^{2-2/k}
    long double ratio_max = 0;    // max_gap / n2^{phi_k}
};

GapReport gap_statistics(int k, u128 n1, u128 n2, int segments = 1);

struct ExceptionalReport {
    int k = 0;
    u128 n = 0;
    u128 z = 0;
    u128 count = 0;         // E_k(N, Z): n in (N, 2N] with no s in (n, n+Z]
    long double density = 0;  // count / N
};

ExceptionalReport exceptional_count(int k, u128 n, u128 z);

// card{N/2 < s_n <= N : Z/2 < s_{n+1} - s_n <= Z}
u128 xi(int k, u128 n, u128 z);

struct GreedyResult {
    u128 x = 0;  // max t with t^k <= n-1
    u128 y = 0;  // max t >= 1 with t^k <= n - x^k
    u128 remainder = 0;
};

GreedyResult greedy_representation(int k, u128 n);

// First sequence element strictly greater than n (exists for every n >= 1).
u128 next_element_after(int k, u128 n);

}  // namespace twopow
