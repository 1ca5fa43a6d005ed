// Acceptance suite: runs every verification criterion at its pinned
// parameters and prints one pass/fail line per criterion (plus the
// individual checks beneath).  Exit status is nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "adem/checks.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    const char* label;
    adem::CheckReport (*run)();
};

bool report(int number, const char* label, const adem::CheckReport& rep,
            double seconds) {
    const bool ok = rep.ok();
    std::printf("[%s] criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", number,
                label, seconds);
    for (const auto& line : rep.lines)
        std::printf("        %s %s%s%s\n", line.pass ? "-" : "!",
                    line.name.c_str(), line.detail.empty() ? "" : ": ",
                    line.detail.c_str());
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    constexpr std::uint64_t kSeed = 7;
    const Criterion criteria[] = {
        {"EZ contraction: five identities exact over Z, arity 2 and 4",
         [] { return adem::check_ez(); }},
        {"cup-i coboundary relation residual == 0 mod 2 (i in 1..3, 50 pairs)",
         [] { return adem::check_eq1(kSeed, 50); }},
        {"Adem relation at i=0 on Delta^7 (constant + 20 sampled 2-cocycles)",
         [] { return adem::check_adem(kSeed, 20); }},
        {"normalized E_3 == composition E_3 on Delta^6 (20 cocycles)",
         [] { return adem::check_e3(kSeed, 20); }},
        {"appendix identities Aw4(tSh4)^n = D_n and Aw4(tSh4)^n t2 Sh4 = 0",
         [] { return adem::check_appendix(kSeed); }},
        {"operator-word normal form + composite nullity properties",
         [] { return adem::check_words(kSeed, 1000); }},
        {"homology fixtures (spheres, RP^2 torsion, tori, S^2 x S^2)",
         [] { return adem::check_homology_fixtures(); }},
        {"contraction and dual: identities exact, coboundary inversion",
         [] { return adem::check_contraction_fixtures(kSeed); }},
        {"Steenrod fixtures: Sq^0 = identity, Sq^q = cup square",
         [] { return adem::check_steenrod_fixtures(); }},
        {"psi pipeline at q=2: completes, w cocycle, deterministic",
         [] { return adem::check_psi_fixtures(); }},
    };

    bool all_ok = true;
    int number = 0;
    for (const auto& c : criteria) {
        ++number;
        const auto t0 = Clock::now();
        const adem::CheckReport rep = c.run();
        const double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        all_ok &= report(number, c.label, rep, secs);
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria pass"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
