// Acceptance gate: runs every criterion at medium scale plus the
// byte-identity determinism check, printing one pass/fail line each.
#include <cstdio>
#include <string>

#include "verify.hpp"

using namespace twopow;

int main() {
    ReproReport rep = reproduce(Scale::medium, 1, 1);

    // determinism: small-scale reports must be byte-identical across
    // repeated runs and across worker-pool sizes
    std::string a = reproduce(Scale::small, 1, 1).render();
    std::string b = reproduce(Scale::small, 1, 1).render();
    std::string c = reproduce(Scale::small, 8, 1).render();
    bool deterministic = a == b && a == c;

    bool all = rep.all_pass() && deterministic;
    std::fputs(rep.render().c_str(), stdout);
    std::printf("[%s] C8-cli byte-identical reports for repeated runs and segments 1 vs 8\n",
                deterministic ? "PASS" : "FAIL");
    std::printf("%s\n", all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
    return all ? 0 : 1;
}
