// twopow command-line front end. Talks to the library exclusively through
// the C API in twopow.h; JSON handling here is presentation only.
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twopow.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;   // domain / usage / format errors
constexpr int kExitVerify = 2;  // a verification suite reported failures

struct Output {
    std::string format = "json";  // "json" or "csv"
    std::string out_path;         // empty = stdout

    std::ostream& stream() {
        if (out_path.empty()) return std::cout;
        if (!file_) {
            file_ = std::make_unique<std::ofstream>(out_path);
            if (!*file_) {
                std::cerr << "error: cannot open output file '" << out_path << "'\n";
                std::exit(kExitError);
            }
        }
        return *file_;
    }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::string take(char* s) {
    std::string out = s ? s : "";
    twopow_free_string(s);
    return out;
}

int fail_status(twopow_status st) {
    std::cerr << "error: " << twopow_last_error() << "\n";
    return st == TWOPOW_ERR_VERIFY ? kExitVerify : kExitError;
}

// Flatten one JSON document into a two-line CSV (header, row). Complex
// objects {re, im} become name_re,name_im; nested objects are dotted;
// the meta block and arrays are skipped (arrays get dedicated emitters).
void flatten(const json& j, const std::string& prefix,
             std::vector<std::string>& names, std::vector<std::string>& cells) {
    for (const auto& [key, val] : j.items()) {
        if (key == "meta") continue;
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (val.is_object()) {
            if (val.contains("re") && val.contains("im") && val.size() == 2) {
                names.push_back(name + "_re");
                cells.push_back(val["re"].dump());
                names.push_back(name + "_im");
                cells.push_back(val["im"].dump());
            } else {
                flatten(val, name, names, cells);
            }
        } else if (val.is_array()) {
            continue;
        } else if (val.is_string()) {
            names.push_back(name);
            cells.push_back(val.get<std::string>());
        } else {
            names.push_back(name);
            cells.push_back(val.dump());
        }
    }
}

void emit_csv_row(std::ostream& os, const json& j) {
    std::vector<std::string> names, cells;
    flatten(j, "", names, cells);
    for (std::size_t i = 0; i < names.size(); ++i)
        os << names[i] << (i + 1 < names.size() ? "," : "\n");
    for (std::size_t i = 0; i < cells.size(); ++i)
        os << cells[i] << (i + 1 < cells.size() ? "," : "\n");
}

int emit(Output& out, const std::string& json_text) {
    json j = json::parse(json_text);
    if (out.format == "csv")
        emit_csv_row(out.stream(), j);
    else
        out.stream() << j.dump(2) << "\n";
    return kExitOk;
}

int run_simple(Output& out, twopow_status st, char** result) {
    if (st != TWOPOW_OK) {
        twopow_free_string(*result);
        return fail_status(st);
    }
    return emit(out, take(*result));
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "error: cannot read '" << path << "'\n";
        std::exit(kExitError);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Config file support: a flat JSON object whose keys mirror long flag
// names. Config values are injected before the real argv, and every
// option takes the last occurrence, so explicit flags win.
std::vector<std::string> splice_config(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (config_path.empty()) return args;

    json cfg = json::parse(read_file(config_path));
    if (!cfg.is_object()) {
        std::cerr << "error: config file must hold a JSON object\n";
        std::exit(kExitError);
    }
    std::vector<std::string> spliced;
    spliced.push_back(args[0]);
    std::size_t body = 1;
    if (args.size() > 1 && !args[1].starts_with("-")) {
        spliced.push_back(args[1]);  // subcommand stays first
        body = 2;
    }
    for (const auto& [key, val] : cfg.items()) {
        spliced.push_back("--" + key);
        spliced.push_back(val.is_string() ? val.get<std::string>() : val.dump());
    }
    for (std::size_t i = body; i < args.size(); ++i) {
        if (args[i] == "--config") {
            ++i;  // already applied
            continue;
        }
        spliced.push_back(args[i]);
    }
    return spliced;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sums of two positive k-th powers: enumeration, gap statistics, "
                 "and circle-method evaluators"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out.out_path, "write output to a file instead of stdout");
    std::string config_dummy;
    app.add_option("--config", config_dummy,
                   "JSON file whose keys mirror long flags; explicit flags win");

    int k = 3;
    double n = 0, n_real = 0, p_param = 0, radius = 0;
    long long z = 0, q_bound = 0, override_h = 0;
    int segments = 1, mem_mb = 0;
    unsigned long long seed = 1;
    std::string lo = "2", hi, n1_s, n2_s, n_s, z_s, alpha, kind = "m", which,
                suite = "identities", scale = "small", checkpoint_path;

    auto* c_exp = app.add_subcommand("exponents", "exponent table sigma/theta/phi, "
                                                  "optionally with X,Y,H,Q for (N,Z)");
    c_exp->add_option("--k", k)->required();
    c_exp->add_option("--n", n_real);
    c_exp->add_option("--z", z);

    auto* c_enum = app.add_subcommand("enumerate", "stream the sequence over [lo, hi]");
    c_enum->add_option("--k", k)->required();
    c_enum->add_option("--lo", lo);
    c_enum->add_option("--hi", hi)->required();
    c_enum->add_option("--checkpoint", checkpoint_path,
                       "resume from this file if present; rewrite it on completion");

    auto* c_nu = app.add_subcommand("nu", "counting function vs its main term");
    c_nu->add_option("--k", k)->required();
    c_nu->add_option("--n", n_s)->required();

    auto* c_gaps = app.add_subcommand("gaps", "gap statistics over (n1, n2]");
    c_gaps->add_option("--k", k)->required();
    c_gaps->add_option("--n1", n1_s)->required();
    c_gaps->add_option("--n2", n2_s)->required();
    c_gaps->add_option("--segments", segments)->check(CLI::PositiveNumber);

    auto* c_exc = app.add_subcommand("exceptional", "count n in (N, 2N] with an empty window (n, n+Z]");
    c_exc->add_option("--k", k)->required();
    c_exc->add_option("--n", n_s)->required();
    c_exc->add_option("--z", z_s)->required();

    auto* c_xi = app.add_subcommand("xi", "gaps in (Z/2, Z] among elements in (N/2, N]");
    c_xi->add_option("--k", k)->required();
    c_xi->add_option("--n", n_s)->required();
    c_xi->add_option("--z", z_s)->required();

    auto* c_greedy = app.add_subcommand("greedy", "greedy two-power representation and remainder");
    c_greedy->add_option("--k", k)->required();
    c_greedy->add_option("--n", n_s)->required();

    auto* c_weyl = app.add_subcommand("weyl", "Weyl sum over (P, 2P]");
    c_weyl->add_option("--alpha", alpha)->required();
    c_weyl->add_option("--p", p_param)->required();
    c_weyl->add_option("--k", k)->required();

    auto* c_arcs = app.add_subcommand("arcs", "classify alpha against an arc family");
    c_arcs->add_option("--kind", kind)->check(CLI::IsMember({"m", "n"}));
    c_arcs->add_option("--k", k)->required();
    c_arcs->add_option("--n", n)->required();
    c_arcs->add_option("--z", z)->required();
    c_arcs->add_option("--q-bound", q_bound, "override the derived denominator bound");
    c_arcs->add_option("--radius", radius, "override the derived arc radius");
    c_arcs->add_option("--classify", alpha, "alpha as a decimal or a/q")->required();

    auto* c_spec = app.add_subcommand("spectrum", "r(n; Z) over a window");
    c_spec->add_option("--k", k)->required();
    c_spec->add_option("--n", n)->required();
    c_spec->add_option("--z", z)->required();
    c_spec->add_option("--n1", n1_s, "window start (exclusive); default full window");
    c_spec->add_option("--n2", n2_s, "window end (inclusive)");
    c_spec->add_option("--mem-mb", mem_mb, "memory cap; 0 reads TWOPOW_MEM_MB");

    auto* c_ups = app.add_subcommand("upsilon", "variance of r(n; Z) against its main term over (N, 2N]");
    c_ups->add_option("--k", k)->required();
    c_ups->add_option("--n", n)->required();
    c_ups->add_option("--z", z)->required();
    c_ups->add_option("--mem-mb", mem_mb);

    auto* c_orc = app.add_subcommand("oracle", "exact brute-force counters");
    c_orc->add_option("--which", which)
        ->check(CLI::IsMember({"i1", "t", "i2", "i5", "subst", "annihilate"}))
        ->required();
    c_orc->add_option("--k", k)->required();
    c_orc->add_option("--n", n)->required();
    c_orc->add_option("--z", z);
    c_orc->add_option("--override-h", override_h, "replace the derived H bound");

    auto* c_ver = app.add_subcommand("verify", "run a verification suite; exit 2 on failure");
    c_ver->add_option("--suite", suite)->check(CLI::IsMember({"identities"}));
    c_ver->add_option("--k", k)->required();
    c_ver->add_option("--n", n)->required();
    c_ver->add_option("--z", z)->required();

    auto* c_rep = app.add_subcommand("reproduce", "acceptance criteria table; exit 2 on any failure");
    c_rep->add_option("--scale", scale)->check(CLI::IsMember({"small", "medium", "large"}));
    c_rep->add_option("--segments", segments)->check(CLI::PositiveNumber);
    c_rep->add_option("--seed", seed);

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();  // global --format/--out/--config after the subcommand

    std::vector<std::string> args = splice_config(argc, argv);
    std::vector<char*> argp;
    for (auto& a : args) argp.push_back(a.data());
    try {
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitError;
    }

    char* result = nullptr;

    if (c_exp->parsed()) {
        twopow_status st = twopow_exponent_table(k, &result);
        if (st != TWOPOW_OK) return fail_status(st);
        json j = json::parse(take(result));
        if (c_exp->count("--n")) {
            char* pjson = nullptr;
            st = twopow_circle_parameters(k, n_real, z, &pjson);
            if (st != TWOPOW_OK) return fail_status(st);
            j["parameters"] = json::parse(take(pjson));
        }
        return emit(out, j.dump());
    }

    if (c_enum->parsed()) {
        twopow_stream* s = nullptr;
        twopow_status st;
        std::ifstream ck(checkpoint_path);
        if (!checkpoint_path.empty() && ck) {
            std::ostringstream ss;
            ss << ck.rdbuf();
            st = twopow_stream_resume(ss.str().c_str(), hi.c_str(), &s);
        } else {
            st = twopow_stream_open(k, lo.c_str(), hi.c_str(), &s);
        }
        if (st != TWOPOW_OK) return fail_status(st);

        std::ostream& os = out.stream();
        bool csv = out.format == "csv";
        if (csv) os << "value,reps,x,y\n";
        char value[48], x[48], y[48];
        long long reps = 0;
        bool first = true;
        if (!csv) os << "[";
        int rc;
        while ((rc = twopow_stream_next(s, value, &reps, x, y)) == 1) {
            if (csv) {
                os << value << "," << reps << "," << x << "," << y << "\n";
            } else {
                os << (first ? "" : ",") << "\n  {\"value\":\"" << value
                   << "\",\"reps\":" << reps << ",\"x\":\"" << x
                   << "\",\"y\":\"" << y << "\"}";
                first = false;
            }
        }
        if (!csv) os << "\n]\n";
        if (rc < 0) {
            twopow_stream_close(s);
            return fail_status(static_cast<twopow_status>(-rc));
        }
        if (!checkpoint_path.empty()) {
            char* cp = nullptr;
            st = twopow_stream_checkpoint(s, &cp);
            if (st != TWOPOW_OK) {
                twopow_stream_close(s);
                return fail_status(st);
            }
            std::ofstream f(checkpoint_path);
            f << take(cp);
        }
        twopow_stream_close(s);
        return kExitOk;
    }

    if (c_nu->parsed())
        return run_simple(out, twopow_nu(k, n_s.c_str(), &result), &result);
    if (c_gaps->parsed())
        return run_simple(out, twopow_gap_statistics(k, n1_s.c_str(), n2_s.c_str(),
                                                     segments, &result), &result);
    if (c_exc->parsed())
        return run_simple(out, twopow_exceptional_count(k, n_s.c_str(), z_s.c_str(),
                                                        &result), &result);
    if (c_xi->parsed())
        return run_simple(out, twopow_xi(k, n_s.c_str(), z_s.c_str(), &result), &result);
    if (c_greedy->parsed())
        return run_simple(out, twopow_greedy(k, n_s.c_str(), &result), &result);
    if (c_weyl->parsed())
        return run_simple(out, twopow_weyl_sum(alpha.c_str(), p_param, k, &result),
                          &result);
    if (c_arcs->parsed())
        return run_simple(out, twopow_classify(kind.c_str(), k, n, z, q_bound,
                                               radius, alpha.c_str(), &result),
                          &result);

    if (c_spec->parsed()) {
        twopow_status st = twopow_spectrum(k, n, z, n1_s.c_str(), n2_s.c_str(),
                                           mem_mb, &result);
        if (st != TWOPOW_OK) return fail_status(st);
        json j = json::parse(take(result));
        if (out.format == "csv") {
            std::ostream& os = out.stream();
            os << "n,r\n";
            unsigned long long base = std::stoull(j["n_lo"].get<std::string>());
            const auto& r = j["r"];
            for (std::size_t i = 0; i < r.size(); ++i)
                os << base + 1 + i << "," << r[i].get<std::uint64_t>() << "\n";
            return kExitOk;
        }
        return emit(out, j.dump());
    }

    if (c_ups->parsed())
        return run_simple(out, twopow_upsilon(k, n, z, mem_mb, &result), &result);
    if (c_orc->parsed())
        return run_simple(out, twopow_oracle(which.c_str(), k, n, z, override_h,
                                             &result), &result);

    if (c_ver->parsed()) {
        twopow_status st = twopow_verify_identities(k, n, z, &result);
        if (st != TWOPOW_OK && st != TWOPOW_ERR_VERIFY) {
            twopow_free_string(result);
            return fail_status(st);
        }
        emit(out, take(result));
        return st == TWOPOW_OK ? kExitOk : kExitVerify;
    }

    if (c_rep->parsed()) {
        twopow_status st = twopow_reproduce(scale.c_str(), segments, seed, &result);
        if (st != TWOPOW_OK && st != TWOPOW_ERR_VERIFY) {
            twopow_free_string(result);
            return fail_status(st);
        }
        out.stream() << take(result);
        return st == TWOPOW_OK ? kExitOk : kExitVerify;
    }

    std::cerr << "error: no subcommand given\n";
    return kExitError;
}
