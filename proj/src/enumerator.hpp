#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "int128.hpp"

namespace twopow {

// One element of the sequence s_{k,1} < s_{k,2} < ... of sums of two
// positive k-th powers, with its exact unordered representation count.
struct RepresentedValue {
    u128 value = 0;
    long long reps = 0;
    u128 x = 0;  // witness, x <= y, smallest x among representations
    u128 y = 0;
};

// Streaming k-way merge over the rows y = 1, 2, ...; row y contributes
// x^k + y^k for x >= y, so every unordered pair appears exactly once.
// Frontier size is at most floor(hi^{1/k}) + 1.
class SumStream {
  public:
    SumStream(int k, u128 lo, u128 hi);

    // Checkpoint format: {"version":1,"k":k,"rows":[{"y":..,"x":..}],
    // "emitted_up_to":..}. 128-bit fields are decimal strings.
    static SumStream from_checkpoint(const std::string& json_text, u128 hi);
    std::string checkpoint() const;

    // Next sequence element in [lo, hi], or nullopt when exhausted.
    std::optional<RepresentedValue> next();

    int k() const { return k_; }
    std::size_t frontier_size() const { return heap_.size(); }

  private:
    struct Row {
        u128 value;
        u128 y;
        u128 x;
        bool operator>(const Row& o) const { return value > o.value; }
    };

    SumStream(int k, u128 hi);  // uninitialized rows, for resume
    void push_row(u128 y, u128 x);

    int k_;
    u128 hi_;
    u128 emitted_up_to_;  // last emitted value; rows below are stale
    std::vector<Row> heap_;  // min-heap on value
};

struct NuResult {
    u128 distinct = 0;  // card of representable values <= N (the paper's nu)
    u128 pairs = 0;     // total unordered representations, Sum of reps
};

NuResult nu(int k, u128 n);

// Gamma(1+1/h)^2 / (2 Gamma(1+2/h)) * N^{2/h}, the main term of the
// counting function asymptotic.
long double nu_main_term(int h, long double n);

// Lexicographically smallest (x, y), x <= y, with x^k + y^k = n.
std::optional<std::pair<u128, u128>> is_sum(int k, u128 n);

}  // namespace twopow
