#include "twopow.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "alpha.hpp"
#include "circle.hpp"
#include "enumerator.hpp"
#include "exponents.hpp"
#include "gaps.hpp"
#include "oracles.hpp"
#include "verify.hpp"

using nlohmann::json;
using namespace twopow;

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
twopow_status wrap(F&& f) {
    try {
        f();
        return TWOPOW_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return TWOPOW_ERR_FORMAT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return TWOPOW_ERR_DOMAIN;
    } catch (const std::overflow_error& e) {
        g_last_error = e.what();
        return TWOPOW_ERR_RANGE;
    } catch (const std::range_error& e) {
        g_last_error = e.what();
        return TWOPOW_ERR_RANGE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        // the memory-budget failure surfaces as runtime_error
        return std::string(e.what()).find("memory budget") != std::string::npos
                   ? TWOPOW_ERR_RANGE
                   : TWOPOW_ERR_INTERNAL;
    }
}

std::size_t mem_cap_bytes(int mem_cap_mb) {
    long long mb = mem_cap_mb;
    if (mb <= 0) {
        const char* env = std::getenv("TWOPOW_MEM_MB");
        mb = env ? std::atoll(env) : 0;
    }
    if (mb <= 0) mb = 2048;
    return static_cast<std::size_t>(mb) << 20;
}

json complex_json(const cld& v) {
    return json{{"re", static_cast<double>(v.real())},
                {"im", static_cast<double>(v.imag())}};
}

json params_json(const CircleParameters& p) {
    return json{
        {"k", p.k},
        {"n", static_cast<double>(p.n)},
        {"x", static_cast<double>(p.x)},
        {"y", static_cast<double>(p.y)},
        {"h", static_cast<double>(p.h)},
        {"q", static_cast<double>(p.q)},
        {"z", p.z},
        {"z_flag", z_flag_name(p.z_flag)},
        {"z_lower", static_cast<double>(p.z_lower)},
        {"z_upper", static_cast<double>(p.z_upper)},
        {"x_range", {{"lo", to_string(p.x_range().lo)}, {"hi", to_string(p.x_range().hi)}}},
        {"y_range", {{"lo", to_string(p.y_range().lo)}, {"hi", to_string(p.y_range().hi)}}},
    };
}

void copy_field(char* dst, const std::string& s) {
    // caller guarantees >= 48 bytes, enough for any 128-bit decimal
    std::strncpy(dst, s.c_str(), 47);
    dst[47] = 0;
}

}  // namespace

extern "C" {

const char* twopow_last_error(void) { return g_last_error.c_str(); }

void twopow_free_string(char* s) { std::free(s); }

twopow_status twopow_exponent_table(int k, char** out_json) {
    return wrap([&] {
        ExponentTable t = exponent_table(k);
        json j{
            {"k", t.k},
            {"sigma", t.sigma.str()},
            {"theta", t.theta.str()},
            {"phi", t.phi.str()},
            {"sigma_value", static_cast<double>(t.sigma.value())},
            {"theta_value", static_cast<double>(t.theta.value())},
            {"phi_value", static_cast<double>(t.phi.value())},
            {"meta", {{"sigma", "exact rational, dimensionless exponent"},
                      {"theta", "exact rational, theta = phi - sigma/k^2"},
                      {"phi", "exact rational, phi = (1-1/k)^2"},
                      {"*_value", "binary64 rendering of the exact rational"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_circle_parameters(int k, double n, long long z, char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        json j = params_json(p);
        j["meta"] = {{"x", "X = (N/3)^{1/k}, real"},
                     {"y", "Y = X^{1-(1-sigma)/k}, real"},
                     {"h", "H = 2^k X^sigma, real"},
                     {"q", "Q = X^{1-sigma/k}, real"},
                     {"z_flag", "admissibility against X^{k theta} <= Z <= 6 k^2 X^{k-2+1/k}"},
                     {"ranges", "integer ranges use (P,2P] = {floor(P)+1..floor(2P)}"}};
        *out_json = dup_string(j.dump(2));
    });
}

struct twopow_stream {
    SumStream impl;
};

twopow_status twopow_stream_open(int k, const char* lo, const char* hi,
                                 twopow_stream** out) {
    return wrap([&] {
        u128 l = parse_u128(lo), h = parse_u128(hi);
        *out = new twopow_stream{SumStream(k, l, h)};
    });
}

twopow_status twopow_stream_resume(const char* checkpoint_json, const char* hi,
                                   twopow_stream** out) {
    return wrap([&] {
        u128 h = parse_u128(hi);
        *out = new twopow_stream{SumStream::from_checkpoint(checkpoint_json, h)};
    });
}

int twopow_stream_next(twopow_stream* s, char* value, long long* reps,
                       char* x, char* y) {
    twopow_status st = wrap([&] {
        auto v = s->impl.next();
        if (!v) {
            *reps = -1;
            return;
        }
        copy_field(value, to_string(v->value));
        *reps = v->reps;
        copy_field(x, to_string(v->x));
        copy_field(y, to_string(v->y));
    });
    if (st != TWOPOW_OK) return -static_cast<int>(st);
    return *reps < 0 ? 0 : 1;
}

twopow_status twopow_stream_checkpoint(twopow_stream* s, char** out_json) {
    return wrap([&] { *out_json = dup_string(s->impl.checkpoint()); });
}

void twopow_stream_close(twopow_stream* s) { delete s; }

twopow_status twopow_nu(int k, const char* n, char** out_json) {
    return wrap([&] {
        u128 nn = parse_u128(n);
        NuResult r = nu(k, nn);
        long double main = nu_main_term(k, static_cast<long double>(nn));
        json j{
            {"k", k},
            {"n", to_string(nn)},
            {"distinct", to_string(r.distinct)},
            {"pairs", to_string(r.pairs)},
            {"main_term", static_cast<double>(main)},
            {"ratio", static_cast<double>(static_cast<long double>(r.distinct) / main)},
            {"meta", {{"distinct", "card of representable values <= N (the counting function)"},
                      {"pairs", "total unordered representations; exceeds distinct by the doubly represented values"},
                      {"main_term", "Gamma(1+1/k)^2/(2 Gamma(1+2/k)) N^{2/k}"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_nu_main_term(int h, double n, double* out) {
    return wrap([&] { *out = static_cast<double>(nu_main_term(h, n)); });
}

twopow_status twopow_is_sum(int k, const char* n, char** out_json) {
    return wrap([&] {
        u128 nn = parse_u128(n);
        auto w = is_sum(k, nn);
        json j{{"k", k}, {"n", to_string(nn)}, {"representable", w.has_value()}};
        if (w) {
            j["x"] = to_string(w->first);
            j["y"] = to_string(w->second);
        }
        j["meta"] = {{"x,y", "lexicographically smallest witness with x <= y"}};
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_gap_statistics(int k, const char* n1, const char* n2,
                                    int segments, char** out_json) {
    return wrap([&] {
        GapReport r = gap_statistics(k, parse_u128(n1), parse_u128(n2), segments);
        json j{
            {"k", r.k},
            {"n1", to_string(r.n1)},
            {"n2", to_string(r.n2)},
            {"count", to_string(r.count)},
            {"max_gap", to_string(r.max_gap)},
            {"sum_sq_gaps", to_string(r.sum_sq_gaps)},
            {"ratios", {{"sum_sq_over_n2_pow_1_plus_theta", static_cast<double>(r.ratio_theta)},
                        {"sum_sq_over_n2_pow_2_minus_2_over_k", static_cast<double>(r.ratio_conj)},
                        {"max_gap_over_n2_pow_phi", static_cast<double>(r.ratio_max)}}},
            {"meta", {{"sum_sq_gaps", "Sum over s in (n1,n2] of (next(s)-s)^2; the last gap overshoots n2"},
                      {"ratios", "diagnostics against n2^{1+theta_k}, n2^{2-2/k}, n2^{phi_k}"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_exceptional_count(int k, const char* n, const char* z,
                                       char** out_json) {
    return wrap([&] {
        ExceptionalReport r = exceptional_count(k, parse_u128(n), parse_u128(z));
        json j{
            {"k", r.k},
            {"n", to_string(r.n)},
            {"z", to_string(r.z)},
            {"count", to_string(r.count)},
            {"density", static_cast<double>(r.density)},
            {"meta", {{"count", "E_k(N,Z): n in (N,2N] with no representable value in (n,n+Z]"},
                      {"density", "count / N"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_xi(int k, const char* n, const char* z, char** out_json) {
    return wrap([&] {
        u128 nn = parse_u128(n), zz = parse_u128(z);
        u128 c = xi(k, nn, zz);
        json j{
            {"k", k},
            {"n", to_string(nn)},
            {"z", to_string(zz)},
            {"xi", to_string(c)},
            {"meta", {{"xi", "card{N/2 < s <= N : Z/2 < next(s)-s <= Z}"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_greedy(int k, const char* n, char** out_json) {
    return wrap([&] {
        u128 nn = parse_u128(n);
        GreedyResult r = greedy_representation(k, nn);
        json j{
            {"k", k},
            {"n", to_string(nn)},
            {"x", to_string(r.x)},
            {"y", to_string(r.y)},
            {"remainder", to_string(r.remainder)},
            {"meta", {{"x", "max t with t^k <= n-1"},
                      {"y", "max t >= 1 with t^k <= n - x^k"},
                      {"remainder", "n - x^k - y^k"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_weyl_sum(const char* alpha, double p, int k, char** out_json) {
    return wrap([&] {
        Alpha a = Alpha::parse(alpha);
        cld v = weyl_sum(a, p, k);
        json j{
            {"alpha", alpha},
            {"p", p},
            {"k", k},
            {"terms", to_string(dyadic_range(p).count())},
            {"value", complex_json(v)},
            {"meta", {{"value", "Sum over P < t <= 2P of e(alpha t^k)"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_linear_sum(const char* alpha, long long z, char** out_json) {
    return wrap([&] {
        Alpha a = Alpha::parse(alpha);
        cld v = linear_sum(a, static_cast<u128>(z));
        json j{{"alpha", alpha},
               {"z", z},
               {"value", complex_json(v)},
               {"meta", {{"value", "u(alpha) = Sum over 1 <= t <= Z of e(alpha t)"}}}};
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_gauss_sum(long long q, long long a, int k, char** out_json) {
    return wrap([&] {
        if (q < 1 || a < 0) throw std::domain_error("gauss_sum: need q >= 1, a >= 0");
        cld v = gauss_sum(static_cast<std::uint64_t>(q), static_cast<std::uint64_t>(a), k);
        json j{{"q", q},
               {"a", a},
               {"k", k},
               {"value", complex_json(v)},
               {"meta", {{"value", "S(q,a) = Sum over r <= q of e(a r^k / q)"}}}};
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_classify(const char* kind, int k, double n, long long z,
                              long long q_bound_override, double radius_override,
                              const char* alpha, char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        std::string kd = kind ? kind : "m";
        Dissection d = kd == "n" ? Dissection::difference_arcs(p)
                                 : Dissection::major_arcs(p);
        if (kd != "m" && kd != "n")
            throw std::domain_error("classify: kind must be 'm' or 'n'");
        if (q_bound_override > 0) d.q_bound = static_cast<std::uint64_t>(q_bound_override);
        if (radius_override > 0) d.radius = radius_override;
        Alpha a = Alpha::parse(alpha);
        ArcHit hit = d.classify(a);
        json j{
            {"kind", kd},
            {"alpha", alpha},
            {"q_bound", d.q_bound},
            {"radius", static_cast<double>(d.radius)},
            {"disjoint", d.disjoint()},
            {"label", d.label_name(hit.label)},
            {"meta", {{"label", "exactly one of central / dagger / minor per family"},
                      {"radius", "arc condition |q alpha - a| <= radius"}}},
        };
        if (hit.label != ArcLabel::minor) {
            j["q"] = hit.q;
            j["a"] = hit.a;
        }
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_f_sum(const char* alpha, int k, double n, long long z,
                           char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        Alpha a = Alpha::parse(alpha);
        FSumResult r = f_sum(a, p);
        json j{
            {"alpha", alpha},
            {"k", k},
            {"h_max", r.h_max},
            {"x_count", to_string(r.x_count)},
            {"f", complex_json(r.f())},
            {"f1", complex_json(r.f1)},
            {"meta", {{"f", "F(alpha), differenced Weyl sum over |h| <= H"},
                      {"f1", "the h >= 1 part; F = 2 Re F1 + #x"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_spectrum(int k, double n, long long z, const char* n1,
                              const char* n2, int mem_cap_mb, char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        std::size_t cap = mem_cap_bytes(mem_cap_mb);
        u128 a = n1 && *n1 ? parse_u128(n1) : 0;
        u128 b = n2 && *n2 ? parse_u128(n2) : 0;
        SpectrumTable t = (a == 0 && b == 0) ? spectrum_full(p, cap)
                                             : spectrum(p, a, b, cap);
        json counts = json::array();
        for (std::uint64_t v : t.r) counts.push_back(v);
        json j{
            {"k", t.k},
            {"z", t.z},
            {"n_lo", to_string(t.n_lo)},
            {"n_hi", to_string(t.n_hi)},
            {"x_count", to_string(t.x_count)},
            {"y_count", to_string(t.y_count)},
            {"total", to_string(t.total())},
            {"r", counts},
            {"meta", {{"r", "r(n;Z) for n = n_lo+1 .. n_hi, exact integer counts"},
                      {"total", "equals (#x)(#y)(#z) when the window covers every reachable n"}}},
        };
        *out_json = dup_string(j.dump());
    });
}

twopow_status twopow_upsilon(int k, double n, long long z, int mem_cap_mb,
                             char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        UpsilonReport r = upsilon(p, static_cast<u128>(n), mem_cap_bytes(mem_cap_mb));
        json j{
            {"k", k},
            {"n", n},
            {"z", z},
            {"upsilon", static_cast<double>(r.upsilon)},
            {"scale_xyz", static_cast<double>(r.scale_xyz)},
            {"ratio", static_cast<double>(r.ratio)},
            {"y_real", static_cast<double>(r.y_real)},
            {"y_count", to_string(r.y_count)},
            {"meta", {{"upsilon", "Sum over (N,2N] of |r(n;Z) - k^{-1} n^{-1+1/k} Y Z|^2, real Y"},
                      {"scale_xyz", "X Y Z reference scale"},
                      {"y_count", "#y; the main term uses the real Y (reported for comparison)"}}},
        };
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_oracle(const char* which, int k, double n, long long z,
                            long long override_h, char** out_json) {
    return wrap([&] {
        CircleParameters p = circle_parameters(k, n, z);
        OracleDomain d = OracleDomain::from_params(p);
        if (override_h > 0) d.h_max = override_h;
        std::string w = which ? which : "";
        json j{{"which", w}, {"k", k}, {"n", n}, {"z", z}, {"h", d.h_max}};
        if (w == "i1") {
            j["count"] = to_string(count_i1(d));
            j["diagonal"] = to_string(checked_mul(d.y.count(),
                                                  static_cast<u128>(d.z_max)));
            j["meta"] = {{"count", "solutions of y1^k - y2^k = z1 - z2"},
                         {"diagonal", "(#y)(#z); equals count when k y_min^{k-1} > Z"}};
        } else if (w == "t") {
            j["count"] = to_string(count_t(d));
            j["meta"] = {{"count", "solutions of x1^k - x2^k = y1^k - y2^k + z1 - z2"}};
        } else if (w == "i2") {
            I2Report r = count_i2(d.x, d.h_max, k);
            j["count"] = to_string(r.count);
            j["admissible_pairs"] = to_string(r.admissible_pairs);
            j["diagonal_ratio"] = static_cast<double>(r.diagonal_ratio);
            j["meta"] = {{"count", "solutions of h1 Psi(x1,h1) = h2 Psi(x2,h2)"},
                         {"diagonal_ratio", "count / admissible (h,x) pairs"}};
        } else if (w == "i5") {
            j["count"] = to_string(count_i5(d.x, d.h_max, d.z_max, k));
            j["meta"] = {{"count", "solutions of h (Psi(x1,h) - Psi(x2,h)) = z1 - z2"}};
        } else if (w == "subst") {
            SubstitutionCheck c = verify_h_substitution(d);
            j["direct"] = to_string(c.direct);
            j["substituted"] = to_string(c.substituted);
            j["equal"] = c.equal;
            j["meta"] = {{"equal", "the h = x1 - x2 substitution preserves the exact count"}};
        } else if (w == "annihilate") {
            AnnihilationReport r = annihilation_check(
                p, override_h > 0 ? std::optional<long long>(override_h) : std::nullopt);
            j["count"] = to_string(r.count);
            j["inequality_holds"] = r.inequality_holds;
            j["lhs"] = to_string(r.lhs);
            j["rhs"] = to_string(r.rhs);
            j["meta"] = {{"count", "solutions with |x1 - x2| > H; zero when lhs > rhs"},
                         {"lhs", "k H X^{k-1}"},
                         {"rhs", "(2Y)^k + Z"}};
        } else {
            throw std::domain_error("oracle: unknown counter '" + w + "'");
        }
        *out_json = dup_string(j.dump(2));
    });
}

twopow_status twopow_verify_identities(int k, double n, long long z,
                                       char** out_json) {
    bool all = true;
    twopow_status st = wrap([&] {
        auto checks = verify_identities(k, n, z, mem_cap_bytes(0));
        json arr = json::array();
        for (const auto& c : checks) {
            all = all && c.pass;
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        json j{{"k", k}, {"n", n}, {"z", z}, {"checks", arr}, {"all_pass", all}};
        *out_json = dup_string(j.dump(2));
    });
    if (st != TWOPOW_OK) return st;
    if (!all) {
        g_last_error = "verification suite reported failures";
        return TWOPOW_ERR_VERIFY;
    }
    return TWOPOW_OK;
}

twopow_status twopow_reproduce(const char* scale, int segments,
                               unsigned long long seed, char** out_report) {
    bool all = true;
    twopow_status st = wrap([&] {
        ReproReport r = reproduce(parse_scale(scale ? scale : "small"), segments, seed);
        all = r.all_pass();
        *out_report = dup_string(r.render());
    });
    if (st != TWOPOW_OK) return st;
    if (!all) {
        g_last_error = "reproduce: at least one criterion failed";
        return TWOPOW_ERR_VERIFY;
    }
    return TWOPOW_OK;
}

}  // extern "C"
