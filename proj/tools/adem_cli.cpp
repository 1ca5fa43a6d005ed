#include <chrono>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adem/checks.hpp"
#include "adem/io.hpp"
#include "adem/reduce.hpp"

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitInput = 2;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordered_json complex_stats(const adem::SimplicialSet& K) {
    ordered_json j;
    j["name"] = K.name();
    j["dimension"] = K.dim();
    std::vector<std::size_t> counts;
    for (int d = 0; d <= K.dim(); ++d) counts.push_back(K.n_simplices(d));
    j["simplices_per_dimension"] = counts;
    j["total_simplices"] = K.total_simplices();
    return j;
}

ordered_json matrix_json(const adem::Mod2Matrix& M) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        std::vector<int> row(M.cols());
        for (std::size_t c = 0; c < M.cols(); ++c) row[c] = M(r, c);
        rows.push_back(row);
    }
    ordered_json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    j["entries"] = rows;
    return j;
}

int cmd_homology(const std::string& path, const std::string& ring) {
    const auto t0 = Clock::now();
    adem::SimplicialSet K = adem::to_complex(adem::load_complex_file(path));
    const bool mod2 = (ring == "z2");
    const adem::HomologySummary h = adem::homology(K, mod2);

    ordered_json j;
    j["command"] = "homology";
    j["ring"] = mod2 ? "Z/2" : "Z";
    j["complex"] = complex_stats(K);
    j["betti"] = h.betti;
    if (!mod2) {
        ordered_json tors = ordered_json::array();
        for (int n = 0; n < static_cast<int>(h.torsion.size()); ++n) {
            std::vector<std::string> t;
            for (const auto& coeff : h.torsion[n]) t.push_back(coeff.str());
            tors.push_back(t);
        }
        j["torsion"] = tors;
    }
    j["elapsed_ms"] = ms_since(t0);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_sq(const std::string& path, int q, int i) {
    const auto t0 = Clock::now();
    adem::SimplicialSet K = adem::to_complex(adem::load_complex_file(path));
    adem::Reducer red(K);
    const bool via_z = (i == 2);
    const adem::Mod2Matrix M = red.sq_matrix(q, i, via_z);

    ordered_json j;
    j["command"] = "sq";
    j["q"] = q;
    j["i"] = i;
    j["domain"] = via_z ? ("H^" + std::to_string(q) + "(K;Z)")
                        : ("H^" + std::to_string(q) + "(K;Z/2)");
    j["target"] = "H^" + std::to_string(q + i) + "(K;Z/2)";
    j["complex"] = complex_stats(K);
    j["matrix"] = matrix_json(M);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < M.cols(); ++k)
        labels.push_back("a" + std::to_string(k + 1));
    j["domain_basis"] = labels;
    j["elapsed_ms"] = ms_since(t0);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_psi(const std::string& path, int q) {
    const auto t0 = Clock::now();
    adem::SimplicialSet K = adem::to_complex(adem::load_complex_file(path));
    adem::Reducer red(K);
    const adem::AdemResult res = red.psi(q);

    ordered_json j;
    j["command"] = "psi";
    j["q"] = q;
    j["complex"] = complex_stats(K);
    j["rank_Hq_Z"] = res.hq_rank;
    j["kernel_basis"] = res.kernel;
    j["psi_classes"] = res.classes;
    j["indeterminacy_basis"] = res.indeterminacy;
    j["w_cocycle_check"] = "pass";  // psi throws otherwise
    j["eta_evenness_check"] = "pass";
    j["elapsed_ms"] = ms_since(t0);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, int samples) {
    const auto t0 = Clock::now();
    const adem::CheckReport rep = adem::run_suite(suite, seed, samples);

    ordered_json j;
    j["command"] = "check";
    j["suite"] = rep.suite;
    j["seed"] = seed;
    j["samples"] = samples;
    ordered_json lines = ordered_json::array();
    for (const auto& l : rep.lines) {
        ordered_json e;
        e["check"] = l.name;
        e["result"] = l.pass ? "pass" : "FAIL";
        if (!l.detail.empty()) e["detail"] = l.detail;
        lines.push_back(e);
        std::cerr << (l.pass ? "[pass] " : "[FAIL] ") << l.name
                  << (l.detail.empty() ? "" : " (" + l.detail + ")") << "\n";
    }
    j["checks"] = lines;
    j["ok"] = rep.ok();
    j["elapsed_ms"] = ms_since(t0);
    std::cout << j.dump(2) << "\n";
    return rep.ok() ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steenrod squares and Adem secondary operations on finite "
                 "simplicial sets"};
    app.require_subcommand(1);

    std::string file, ring = "z", suite;
    int q = 2, i = 2;
    std::uint64_t seed = 7;
    int samples = 20;

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion");
    hom->add_option("file", file, "complex file")->required();
    hom->add_option("--ring", ring, "coefficient ring: z or z2")
        ->check(CLI::IsMember({"z", "z2"}));

    auto* sq = app.add_subcommand("sq", "matrix of a Steenrod square");
    sq->add_option("file", file, "complex file")->required();
    sq->add_option("--q", q, "source degree")->required();
    sq->add_option("--i", i, "which square (default 2)");

    auto* psi = app.add_subcommand("psi", "Adem secondary operation Psi_q");
    psi->add_option("file", file, "complex file")->required();
    psi->add_option("--q", q, "source degree (>= 2)")->required();

    auto* chk = app.add_subcommand("check", "run a verification suite");
    chk->add_option("suite", suite, "one of: ez eq1 adem e3 appendix words "
                                    "homology contraction steenrod psi")
        ->required();
    chk->add_option("--seed", seed, "random seed");
    chk->add_option("--samples", samples, "sample count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (hom->parsed()) return cmd_homology(file, ring);
        if (sq->parsed()) {
            if (q < i || i < 0) {
                std::cerr << "error: need Q >= I >= 0\n";
                return kExitInput;
            }
            return cmd_sq(file, q, i);
        }
        if (psi->parsed()) {
            if (q < 2) {
                std::cerr << "error: psi needs --q >= 2\n";
                return kExitInput;
            }
            return cmd_psi(file, q);
        }
        if (chk->parsed()) return cmd_check(suite, seed, samples);
    } catch (const adem::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitInput;
}
