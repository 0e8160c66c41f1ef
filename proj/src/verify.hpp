#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "int128.hpp"

namespace twopow {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Exact finite identities at one parameter set: spectrum total, quadrature
// equivalence, I1 exactness, h-substitution, annihilation, spectrum vs T.
std::vector<CheckResult> verify_identities(int k, long double n, long long z,
                                           std::size_t mem_cap_bytes = 0);

enum class Scale { small, medium, large };

Scale parse_scale(const std::string& s);

struct ReproRow {
    std::string id;
    std::string description;
    std::string measured;
    std::string expected;
    bool pass = false;
};

struct ReproReport {
    Scale scale;
    int segments = 1;
    std::uint64_t seed = 0;
    std::vector<ReproRow> rows;
    bool all_pass() const;
    std::string render() const;  // deterministic text table
};

ReproReport reproduce(Scale scale, int segments = 1, std::uint64_t seed = 1);

}  // namespace twopow
