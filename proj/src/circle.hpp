#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "alpha.hpp"
#include "exponents.hpp"
#include "int128.hpp"

namespace twopow {

using cld = std::complex<long double>;

// Sum_{P < t <= 2P} e(alpha t^k); P = X gives f, P = Y gives g.
cld weyl_sum(const Alpha& alpha, long double p, int k);

// u(alpha) = Sum_{1 <= z <= Z} e(alpha z), geometric closed form.
cld linear_sum(const Alpha& alpha, u128 z);

// S(q, a) = Sum_{r=1}^q e(a r^k / q), exact rational phases.
cld gauss_sum(std::uint64_t q, std::uint64_t a, int k);

// V(beta; P) = Sum_{P^k < m <= (2P)^k} k^{-1} m^{-1+1/k} e(beta m).
cld v_integral(long double beta, long double p, int k);

enum class ArcLabel { central, dagger, minor };

struct ArcHit {
    ArcLabel label = ArcLabel::minor;
    std::uint64_t q = 0;
    std::uint64_t a = 0;
};

// Arc family over rationals a/q, 0 <= a <= q <= q_bound, gcd(a, q) = 1,
// with membership |q alpha - a| <= radius. The major family takes
// q_bound = Q, radius = Q X^{-k}; the differenced family q_bound = X,
// radius = C X Y^{-k} with C = k^{-3k}.
struct Dissection {
    enum class Kind { major, difference };
    Kind kind = Kind::major;
    std::uint64_t q_bound = 1;
    long double radius = 0;

    static Dissection major_arcs(const CircleParameters& p);
    static Dissection difference_arcs(const CircleParameters& p);

    // pairwise disjointness of the arcs: 2 * q_bound^2 * radius < 1
    bool disjoint() const;

    // exactly one label; (q, a) filled for central/dagger hits
    ArcHit classify(const Alpha& alpha) const;

    const char* label_name(ArcLabel l) const;
};

// f*(alpha) = q^{-1} S(q,a) V(alpha - a/q; P) on the arc containing alpha,
// zero off the dissection. P = X gives f*, P = Y the g* analogue.
cld star_approx(const Alpha& alpha, const Dissection& d, long double p, int k);

// u(alpha) when ||alpha|| <= Q X^{-k}, else zero.
cld u_star(const Alpha& alpha, const CircleParameters& p);

// Psi(x, h) = Sum_{j=1}^k binom(k, j) x^{k-j} h^{j-1}; satisfies
// h Psi(x, h) = (x+h)^k - x^k for every h, including h <= 0.
i128 psi(i128 x, i128 h, int k);

// F(alpha) = Sum_{|h| <= H} Sum_{X < x, x+h <= 2X} e(h Psi(x, h) alpha).
// The terms with h and -h pair into conjugates and the h = 0 block is the
// constant #x, so F = 2 Re F1 + #x with F1 the h >= 1 part.
struct FSumResult {
    cld f1;
    u128 x_count = 0;
    long long h_max = 0;
    cld f() const { return {2.0L * f1.real() + static_cast<long double>(x_count), 0.0L}; }
};

FSumResult f_sum(const Alpha& alpha, const CircleParameters& p);

// r(n; Z) for all n in (n_lo, n_hi], by histogramming c(m) = #{x^k + y^k = m}
// and sliding-window summation over z in [1, Z].
struct SpectrumTable {
    int k = 0;
    long long z = 0;
    u128 n_lo = 0, n_hi = 0;
    u128 x_count = 0, y_count = 0;
    std::vector<std::uint64_t> r;  // r[i] = r(n_lo + 1 + i; Z)

    std::uint64_t at(u128 n) const;
    u128 total() const;
    u128 sum_squares() const;
};

SpectrumTable spectrum(const CircleParameters& p, u128 n_lo, u128 n_hi,
                       std::size_t mem_cap_bytes = 0);

// Window covering every reachable n, so total() = (#x)(#y)(#z) exactly.
SpectrumTable spectrum_full(const CircleParameters& p, std::size_t mem_cap_bytes = 0);

// Evaluates r(n; Z) as the mean of f g u e(-n alpha) over m_samples
// equispaced rational points; exact up to rounding once m_samples exceeds
// the degree (2X)^k + (2Y)^k + Z of the trigonometric polynomial.
class QuadratureEvaluator {
  public:
    QuadratureEvaluator(const CircleParameters& p, std::uint64_t m_samples);
    long double r(u128 n) const;
    std::uint64_t samples() const { return m_; }

  private:
    std::uint64_t m_;
    std::vector<cld> product_;  // f g u at j / m
    std::vector<cld> roots_;    // e(j / m)
};

long double r_quadrature(u128 n, const CircleParameters& p, std::uint64_t m_samples);

// k^{-1} * y_weight * Z * n^{-1+1/k}, the expected value of r(n; Z).
long double rho2_main(u128 n, long double y_weight, long double z, int k);

struct UpsilonReport {
    long double upsilon = 0;
    long double scale_xyz = 0;  // X * Y * Z reference scale
    long double ratio = 0;
    long double y_real = 0;     // the real parameter Y used in the main term
    u128 y_count = 0;           // #y, reported alongside (differs by O(1))
};

UpsilonReport upsilon(const CircleParameters& p, u128 n, std::size_t mem_cap_bytes = 0);

}  // namespace twopow
