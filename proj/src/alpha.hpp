#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "int128.hpp"

namespace twopow {

// A point of [0,1), held as 128-bit fixed point (alpha * 2^128, wrapping).
// Rational inputs additionally keep the reduced fraction num/den so that
// phases of integer multiples are exact roots of unity.
class Alpha {
  public:
    Alpha() = default;

    static Alpha from_fixed(u128 fixed);
    static Alpha from_rational(std::uint64_t a, std::uint64_t q);
    // "a/q" (exact) or a decimal such as "0.125" (exact as a fraction
    // over a power of ten, up to 18 fractional digits)
    static Alpha parse(const std::string& text);

    bool is_rational() const { return rational_; }
    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }
    u128 fixed() const { return fixed_; }

    long double value() const;
    // frac(alpha * m) in [0,1); exact mod den for rational alpha, otherwise
    // wrapping fixed-point multiply (per-term phase error below 2^-60 for
    // m below 2^64)
    long double phase_times(u128 m) const;
    // distance to the nearest integer, ||alpha||
    long double distance_to_int() const;

  private:
    u128 fixed_ = 0;
    bool rational_ = false;
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

// e(t) = exp(2 pi i t)
std::complex<long double> unit_phase(long double t);

}  // namespace twopow
