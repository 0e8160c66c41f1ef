#include "enumerator.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace twopow {

namespace {
constexpr int kCheckpointVersion = 1;
const u128 kHiBudget = static_cast<u128>(1) << 125;  // 2^127 / 4
}  // namespace

SumStream::SumStream(int k, u128 hi) : k_(k), hi_(hi), emitted_up_to_(0) {}

SumStream::SumStream(int k, u128 lo, u128 hi) : k_(k), hi_(hi) {
    if (k < 3) throw std::domain_error("SumStream: k must be >= 3");
    if (lo < 2 || lo > hi) throw std::domain_error("SumStream: need 2 <= lo <= hi");
    if (hi > kHiBudget) throw std::range_error("SumStream: hi exceeds the 2^127/4 budget");
    emitted_up_to_ = lo - 1;
    for (u128 y = 1;; ++y) {
        u128 yk;
        try {
            yk = checked_pow(y, k_);
        } catch (const std::overflow_error&) {
            break;
        }
        if (yk > hi / 2) break;  // row minimum 2 y^k already beyond hi
        // smallest x >= y with y^k + x^k >= lo
        u128 x = y;
        if (yk + checked_pow(x, k_) < lo) {
            u128 need = lo - yk;
            u128 r = kth_root(need, k_);
            x = (checked_pow(r, k_) == need) ? r : r + 1;
        }
        push_row(y, x);
    }
    std::make_heap(heap_.begin(), heap_.end(), std::greater<>());
}

void SumStream::push_row(u128 y, u128 x) {
    u128 xk, yk, v;
    // rows whose next candidate exceeds the 128-bit range are finished:
    // every admissible hi is far below 2^128
    try {
        xk = checked_pow(x, k_);
        yk = checked_pow(y, k_);
        v = checked_add(xk, yk);
    } catch (const std::overflow_error&) {
        return;
    }
    heap_.push_back(Row{v, y, x});
}

std::optional<RepresentedValue> SumStream::next() {
    if (heap_.empty() || heap_.front().value > hi_) return std::nullopt;
    RepresentedValue out;
    out.value = heap_.front().value;
    out.reps = 0;
    std::vector<Row> drained;
    while (!heap_.empty() && heap_.front().value == out.value) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
        drained.push_back(heap_.back());
        heap_.pop_back();
    }
    for (const Row& r : drained) {
        ++out.reps;
        if (out.reps == 1 || r.y < out.x) {
            out.x = r.y;  // row fixes x >= y, so (y, x) is the sorted pair
            out.y = r.x;
        }
    }
    for (const Row& r : drained) {
        push_row(r.y, r.x + 1);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
    }
    emitted_up_to_ = out.value;
    return out;
}

std::string SumStream::checkpoint() const {
    nlohmann::json rows = nlohmann::json::array();
    std::vector<Row> sorted = heap_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Row& a, const Row& b) { return a.y < b.y; });
    for (const Row& r : sorted)
        rows.push_back({{"y", to_string(r.y)}, {"x", to_string(r.x)}});
    nlohmann::json j = {
        {"version", kCheckpointVersion},
        {"k", k_},
        {"rows", rows},
        {"emitted_up_to", to_string(emitted_up_to_)},
    };
    return j.dump();
}

SumStream SumStream::from_checkpoint(const std::string& json_text, u128 hi) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("checkpoint: ") + e.what());
    }
    try {
        if (!j.contains("version") || j["version"].get<int>() != kCheckpointVersion)
            throw std::invalid_argument("checkpoint: unsupported format version");
        int k = j.at("k").get<int>();
        if (k < 3) throw std::invalid_argument("checkpoint: invalid k");
        if (hi > kHiBudget)
            throw std::range_error("SumStream: hi exceeds the 2^127/4 budget");
        SumStream s(k, hi);
        s.emitted_up_to_ = parse_u128(j.at("emitted_up_to").get<std::string>());
        for (const auto& row : j.at("rows")) {
            u128 y = parse_u128(row.at("y").get<std::string>());
            u128 x = parse_u128(row.at("x").get<std::string>());
            if (y == 0 || x < y) throw std::invalid_argument("checkpoint: corrupt row");
            s.push_row(y, x);
        }
        std::make_heap(s.heap_.begin(), s.heap_.end(), std::greater<>());
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("checkpoint: ") + e.what());
    }
}

NuResult nu(int k, u128 n) {
    if (n < 2) throw std::domain_error("nu: N must be >= 2");
    NuResult r;
    SumStream s(k, 2, n);
    while (auto v = s.next()) {
        ++r.distinct;
        r.pairs += static_cast<u128>(v->reps);
    }
    return r;
}

long double nu_main_term(int h, long double n) {
    if (h < 3) throw std::domain_error("nu_main_term: h must be >= 3");
    if (!(n >= 0)) throw std::domain_error("nu_main_term: N must be nonnegative");
    long double g1 = tgammal(1.0L + 1.0L / h);
    long double g2 = tgammal(1.0L + 2.0L / h);
    return g1 * g1 / (2.0L * g2) * powl(n, 2.0L / h);
}

std::optional<std::pair<u128, u128>> is_sum(int k, u128 n) {
    if (n < 2) throw std::domain_error("is_sum: n must be >= 2");
    if (k < 3) throw std::domain_error("is_sum: k must be >= 3");
    u128 x = 1;
    u128 y = kth_root(n - 1, k);
    while (x <= y) {
        u128 s = checked_pow(x, k) + checked_pow(y, k);
        if (s == n) return std::make_pair(x, y);
        if (s < n) ++x;
        else --y;
    }
    return std::nullopt;
}

}  // namespace twopow
