#include "circle.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twopow {

namespace {

i128 checked_mul_i(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("psi: 128-bit overflow");
    return r;
}

i128 checked_add_i(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("psi: 128-bit overflow");
    return r;
}

}  // namespace

cld weyl_sum(const Alpha& alpha, long double p, int k) {
    if (!(p >= 1)) throw std::domain_error("weyl_sum: P must be >= 1");
    IntRange tr = dyadic_range(p);
    cld acc = 0;
    for (u128 t = tr.lo; t <= tr.hi; ++t)
        acc += unit_phase(alpha.phase_times(checked_pow(t, k)));
    return acc;
}

cld linear_sum(const Alpha& alpha, u128 z) {
    if (z < 1) throw std::domain_error("linear_sum: Z must be >= 1");
    long double dist = alpha.distance_to_int();
    if (dist * static_cast<long double>(z) < 1e-6L || dist < 1e-15L) {
        // geometric form loses accuracy near integers; sum directly
        cld acc = 0;
        for (u128 t = 1; t <= z; ++t)
            acc += unit_phase(alpha.phase_times(t));
        return acc;
    }
    cld q1 = unit_phase(alpha.phase_times(1));
    cld qz = unit_phase(alpha.phase_times(z));
    return q1 * (qz - 1.0L) / (q1 - 1.0L);
}

cld gauss_sum(std::uint64_t q, std::uint64_t a, int k) {
    if (q < 1) throw std::domain_error("gauss_sum: q must be >= 1");
    cld acc = 0;
    for (std::uint64_t r = 1; r <= q; ++r) {
        std::uint64_t rk = powmod_u64(r, static_cast<std::uint64_t>(k), q);
        std::uint64_t ph = mulmod_u64(a % q, rk, q);
        acc += unit_phase(static_cast<long double>(ph) / static_cast<long double>(q));
    }
    return acc;
}

cld v_integral(long double beta, long double p, int k) {
    if (!(p >= 1)) throw std::domain_error("v_integral: P must be >= 1");
    u128 lo = static_cast<u128>(floorl(powl(p, k))) + 1;
    long double top = powl(2 * p, k);
    if (top > 0x1p100L) throw std::overflow_error("v_integral: range too large");
    u128 hi = static_cast<u128>(floorl(top));
    cld acc = 0;
    long double e = -1.0L + 1.0L / k;
    for (u128 m = lo; m <= hi; ++m) {
        long double md = static_cast<long double>(m);
        long double ph = beta * md;
        acc += powl(md, e) * unit_phase(ph - floorl(ph));
    }
    return acc / static_cast<long double>(k);
}

Dissection Dissection::major_arcs(const CircleParameters& p) {
    Dissection d;
    d.kind = Kind::major;
    d.q_bound = static_cast<std::uint64_t>(p.q_int());
    if (d.q_bound < 1) d.q_bound = 1;
    d.radius = p.q * powl(p.x, static_cast<long double>(-p.k));
    return d;
}

Dissection Dissection::difference_arcs(const CircleParameters& p) {
    Dissection d;
    d.kind = Kind::difference;
    d.q_bound = static_cast<std::uint64_t>(floorl(p.x));
    if (d.q_bound < 1) d.q_bound = 1;
    long double c = powl(static_cast<long double>(p.k), -3.0L * p.k);
    d.radius = c * p.x * powl(p.y, static_cast<long double>(-p.k));
    return d;
}

bool Dissection::disjoint() const {
    return 2.0L * static_cast<long double>(q_bound) * static_cast<long double>(q_bound) *
               radius < 1.0L;
}

namespace {

struct Candidate {
    bool found = false;
    std::uint64_t q = 0, a = 0;
};

// smallest q <= bound with |q alpha - a| <= radius; under disjointness any
// hit is a continued-fraction convergent of alpha
Candidate find_arc(const Alpha& alpha, std::uint64_t bound, long double radius,
                   bool brute) {
    Candidate c;
    // q = 1 first (the central arcs, wraparound distance)
    if (alpha.distance_to_int() <= radius) {
        c.found = true;
        c.q = 1;
        c.a = alpha.value() < 0.5L ? 0 : 1;
        return c;
    }
    if (brute) {
        long double v = alpha.value();
        for (std::uint64_t q = 2; q <= bound; ++q) {
            long double qa = q * v;
            std::uint64_t a = static_cast<std::uint64_t>(roundl(qa));
            if (fabsl(qa - static_cast<long double>(a)) <= radius) {
                std::uint64_t g = std::gcd(a, q);
                c.found = true;
                c.q = q / (g ? g : 1);
                c.a = a / (g ? g : 1);
                return c;
            }
        }
        return c;
    }
    if (alpha.is_rational()) {
        // exact convergents of num/den by Euclid
        std::uint64_t n0 = alpha.num(), d0 = alpha.den();
        std::uint64_t pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}/q_{-1}, p_{-2}/q_{-2}
        std::uint64_t a0 = n0, b0 = d0;
        while (b0 != 0) {
            std::uint64_t quot = a0 / b0;
            std::uint64_t rem = a0 % b0;
            u128 pq = static_cast<u128>(quot) * pm1 + pm2;
            u128 qq = static_cast<u128>(quot) * qm1 + qm2;
            if (qq > bound) break;
            std::uint64_t pp = static_cast<std::uint64_t>(pq);
            std::uint64_t qc = static_cast<std::uint64_t>(qq);
            if (qc >= 2) {
                i128 delta = static_cast<i128>(qc) * n0 - static_cast<i128>(pp) * d0;
                if (delta < 0) delta = -delta;
                if (static_cast<long double>(static_cast<u128>(delta)) <=
                    radius * static_cast<long double>(d0)) {
                    c.found = true;
                    c.q = qc;
                    c.a = pp;
                    return c;
                }
            }
            pm2 = pm1; pm1 = static_cast<std::uint64_t>(pq);
            qm2 = qm1; qm1 = static_cast<std::uint64_t>(qq);
            a0 = b0; b0 = rem;
        }
        return c;
    }
    // floating continued fraction
    long double x = alpha.value();
    long double frac = x;
    std::uint64_t pm1 = 0, pm2 = 1, qm1 = 1, qm2 = 0;  // starts at a0 = 0: 0/1
    for (int it = 0; it < 64; ++it) {
        if (frac < 1e-18L) break;
        frac = 1.0L / frac;
        long double ai = floorl(frac);
        if (ai > 1e18L) break;
        frac -= ai;
        std::uint64_t aq = static_cast<std::uint64_t>(ai);
        u128 pq = static_cast<u128>(aq) * pm1 + pm2;
        u128 qq = static_cast<u128>(aq) * qm1 + qm2;
        if (qq > bound) break;
        std::uint64_t pp = static_cast<std::uint64_t>(pq);
        std::uint64_t qc = static_cast<std::uint64_t>(qq);
        if (qc >= 2 && fabsl(qc * x - static_cast<long double>(pp)) <= radius) {
            c.found = true;
            c.q = qc;
            c.a = pp;
            return c;
        }
        pm2 = pm1; pm1 = pp;
        qm2 = qm1; qm1 = qc;
    }
    return c;
}

}  // namespace

ArcHit Dissection::classify(const Alpha& alpha) const {
    Candidate c = find_arc(alpha, q_bound, radius, !disjoint());
    if (!c.found) return {ArcLabel::minor, 0, 0};
    if (c.q == 1) return {ArcLabel::central, 1, c.a};
    return {ArcLabel::dagger, c.q, c.a};
}

const char* Dissection::label_name(ArcLabel l) const {
    bool major = kind == Kind::major;
    switch (l) {
        case ArcLabel::central: return major ? "C" : "D";
        case ArcLabel::dagger: return major ? "M_dagger" : "N_dagger";
        case ArcLabel::minor: return major ? "m" : "n";
    }
    return "?";
}

cld star_approx(const Alpha& alpha, const Dissection& d, long double p, int k) {
    ArcHit hit = d.classify(alpha);
    if (hit.label == ArcLabel::minor) return 0;
    cld s = gauss_sum(hit.q, hit.a, k);
    long double beta = alpha.value() -
                       static_cast<long double>(hit.a) / static_cast<long double>(hit.q);
    return s / static_cast<long double>(hit.q) * v_integral(beta, p, k);
}

cld u_star(const Alpha& alpha, const CircleParameters& p) {
    long double threshold = p.q * powl(p.x, static_cast<long double>(-p.k));
    if (alpha.distance_to_int() <= threshold)
        return linear_sum(alpha, static_cast<u128>(p.z));
    return 0;
}

i128 psi(i128 x, i128 h, int k) {
    if (k < 1) throw std::domain_error("psi: k must be >= 1");
    i128 acc = 0;
    u128 binom = 1;
    for (int j = 1; j <= k; ++j) {
        binom = binom * static_cast<u128>(k - j + 1) / static_cast<u128>(j);
        i128 term = static_cast<i128>(binom);
        for (int i = 0; i < k - j; ++i) term = checked_mul_i(term, x);
        for (int i = 0; i < j - 1; ++i) term = checked_mul_i(term, h);
        acc = checked_add_i(acc, term);
    }
    return acc;
}

FSumResult f_sum(const Alpha& alpha, const CircleParameters& p) {
    FSumResult out;
    IntRange xr = p.x_range();
    out.x_count = xr.count();
    out.h_max = p.h_int();
    for (long long h = 1; h <= out.h_max; ++h) {
        if (static_cast<u128>(h) >= xr.hi - xr.lo + 1) break;
        for (u128 x = xr.lo; x + static_cast<u128>(h) <= xr.hi; ++x) {
            // h Psi(x, h) = (x+h)^k - x^k, positive for h >= 1
            u128 diff = checked_pow(x + static_cast<u128>(h), p.k) - checked_pow(x, p.k);
            out.f1 += unit_phase(alpha.phase_times(diff));
        }
    }
    return out;
}

SpectrumTable spectrum(const CircleParameters& p, u128 n_lo, u128 n_hi,
                       std::size_t mem_cap_bytes) {
    if (n_hi <= n_lo) throw std::domain_error("spectrum: empty window");
    if (mem_cap_bytes == 0) mem_cap_bytes = static_cast<std::size_t>(2048) << 20;
    SpectrumTable t;
    t.k = p.k;
    t.z = p.z;
    t.n_lo = n_lo;
    t.n_hi = n_hi;
    IntRange xr = p.x_range(), yr = p.y_range();
    t.x_count = xr.count();
    t.y_count = yr.count();

    u128 window = n_hi - n_lo;
    u128 hist_size = window + static_cast<u128>(p.z) - 1;
    if ((hist_size + window) * sizeof(std::uint64_t) > mem_cap_bytes)
        throw std::runtime_error("spectrum: window exceeds the memory budget");

    i128 base = static_cast<i128>(n_lo) + 1 - p.z;  // histogram index m - base
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(hist_size), 0);
    for (u128 x = xr.lo; x <= xr.hi; ++x) {
        u128 xk = checked_pow(x, p.k);
        for (u128 y = yr.lo; y <= yr.hi; ++y) {
            i128 m = static_cast<i128>(checked_add(xk, checked_pow(y, p.k)));
            i128 idx = m - base;
            if (idx >= 0 && idx < static_cast<i128>(hist_size))
                ++hist[static_cast<std::size_t>(idx)];
        }
    }
    // prefix sums, then r(n) = pref(n-1) - pref(n-1-Z)
    std::vector<std::uint64_t> pref(hist.size());
    std::uint64_t run = 0;
    for (std::size_t i = 0; i < hist.size(); ++i) {
        run += hist[i];
        pref[i] = run;
    }
    t.r.resize(static_cast<std::size_t>(window));
    for (u128 n = n_lo + 1; n <= n_hi; ++n) {
        i128 i1 = static_cast<i128>(n) - 1 - base;
        i128 i0 = i1 - p.z;
        std::uint64_t hi = i1 >= 0 ? pref[static_cast<std::size_t>(i1)] : 0;
        std::uint64_t lo = i0 >= 0 ? pref[static_cast<std::size_t>(i0)] : 0;
        t.r[static_cast<std::size_t>(n - n_lo - 1)] = hi - lo;
    }
    return t;
}

SpectrumTable spectrum_full(const CircleParameters& p, std::size_t mem_cap_bytes) {
    IntRange xr = p.x_range(), yr = p.y_range();
    if (xr.empty() || yr.empty())
        throw std::domain_error("spectrum_full: empty x or y range");
    u128 min_sum = checked_pow(xr.lo, p.k) + checked_pow(yr.lo, p.k);
    u128 max_sum = checked_pow(xr.hi, p.k) + checked_pow(yr.hi, p.k);
    return spectrum(p, min_sum, max_sum + static_cast<u128>(p.z), mem_cap_bytes);
}

std::uint64_t SpectrumTable::at(u128 n) const {
    if (n <= n_lo || n > n_hi) throw std::out_of_range("SpectrumTable::at");
    return r[static_cast<std::size_t>(n - n_lo - 1)];
}

u128 SpectrumTable::total() const {
    u128 s = 0;
    for (std::uint64_t v : r) s += v;
    return s;
}

u128 SpectrumTable::sum_squares() const {
    u128 s = 0;
    for (std::uint64_t v : r) s += static_cast<u128>(v) * v;
    return s;
}

QuadratureEvaluator::QuadratureEvaluator(const CircleParameters& p,
                                         std::uint64_t m_samples)
    : m_(m_samples) {
    long double degree = powl(2 * p.x, p.k) + powl(2 * p.y, p.k) +
                         static_cast<long double>(p.z);
    if (!(static_cast<long double>(m_samples) > degree))
        throw std::domain_error(
            "QuadratureEvaluator: sample count must exceed the polynomial degree");
    product_.resize(m_);
    roots_.resize(m_);
    for (std::uint64_t j = 0; j < m_; ++j) {
        Alpha a = Alpha::from_rational(j, m_);
        product_[j] = weyl_sum(a, p.x, p.k) * weyl_sum(a, p.y, p.k) *
                      linear_sum(a, static_cast<u128>(p.z));
        roots_[j] = unit_phase(static_cast<long double>(j) /
                               static_cast<long double>(m_));
    }
}

long double QuadratureEvaluator::r(u128 n) const {
    std::uint64_t nm = static_cast<std::uint64_t>(n % m_);
    cld acc = 0;
    for (std::uint64_t j = 0; j < m_; ++j) {
        std::uint64_t t = mulmod_u64(nm, j, m_);
        acc += product_[j] * roots_[t == 0 ? 0 : m_ - t];  // e(-n j / m)
    }
    return (acc / static_cast<long double>(m_)).real();
}

long double r_quadrature(u128 n, const CircleParameters& p, std::uint64_t m_samples) {
    return QuadratureEvaluator(p, m_samples).r(n);
}

long double rho2_main(u128 n, long double y_weight, long double z, int k) {
    if (n == 0) throw std::domain_error("rho2_main: n must be positive");
    return y_weight * z / k *
           powl(static_cast<long double>(n), -1.0L + 1.0L / k);
}

UpsilonReport upsilon(const CircleParameters& p, u128 n, std::size_t mem_cap_bytes) {
    SpectrumTable t = spectrum(p, n, 2 * n, mem_cap_bytes);
    UpsilonReport rep;
    rep.y_real = p.y;
    rep.y_count = t.y_count;
    long double zf = static_cast<long double>(p.z);
    long double acc = 0;
    for (u128 m = n + 1; m <= 2 * n; ++m) {
        long double d = static_cast<long double>(t.at(m)) -
                        rho2_main(m, p.y, zf, p.k);
        acc += d * d;
    }
    rep.upsilon = acc;
    rep.scale_xyz = p.x * p.y * zf;
    rep.ratio = rep.upsilon / rep.scale_xyz;
    return rep;
}

}  // namespace twopow
