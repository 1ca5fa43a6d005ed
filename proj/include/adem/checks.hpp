#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adem {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckLine> lines;

    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        lines.push_back({name, pass, detail});
    }
};

// Property suites.  Each runs at fixed desk-scale parameters; seeds make
// the sampled parts reproducible.
CheckReport check_ez();
CheckReport check_eq1(std::uint64_t seed, int samples);
CheckReport check_adem(std::uint64_t seed, int samples);
CheckReport check_e3(std::uint64_t seed, int samples);
CheckReport check_appendix(std::uint64_t seed);
CheckReport check_words(std::uint64_t seed, int samples);

// Fixture suites (homology, contraction/dual, Steenrod squares, psi).
CheckReport check_homology_fixtures();
CheckReport check_contraction_fixtures(std::uint64_t seed);
CheckReport check_steenrod_fixtures();
CheckReport check_psi_fixtures();

CheckReport run_suite(const std::string& name, std::uint64_t seed, int samples);
std::vector<std::string> suite_names();

}  // namespace adem
