#include "adem/fixtures.hpp"

#include <algorithm>
#include <stdexcept>

#include "adem/ez.hpp"

namespace adem {

SimplicialSet rp2_6() {
    return SimplicialSet("rp2_6", {{0, 1, 2},
                                   {0, 1, 3},
                                   {0, 2, 4},
                                   {0, 3, 5},
                                   {0, 4, 5},
                                   {1, 2, 5},
                                   {1, 3, 4},
                                   {1, 4, 5},
                                   {2, 3, 4},
                                   {2, 3, 5}});
}

SimplicialSet torus_7() {
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < 7; ++i) {
        std::vector<int> a = {i, (i + 1) % 7, (i + 3) % 7};
        std::vector<int> b = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.push_back(a);
        facets.push_back(b);
    }
    return SimplicialSet("torus_7", facets);
}

SimplicialSet product_complex(const SimplicialSet& K, const SimplicialSet& L,
                              const std::string& name) {
    int stride = 0;
    for (const auto& t : L.maximal_simplices())
        for (int v : t) stride = std::max(stride, v + 1);

    std::vector<std::vector<int>> facets;
    for (const auto& sig : K.maximal_simplices()) {
        const int p = static_cast<int>(sig.size()) - 1;
        for (const auto& tau : L.maximal_simplices()) {
            const int q = static_cast<int>(tau.size()) - 1;
            for (const auto& sf : shuffles(p, q)) {
                std::vector<int> cell;
                cell.reserve(p + q + 1);
                int ia = 0, ib = 0;
                cell.push_back(sig[0] * stride + tau[0]);
                for (int step = 0; step < p + q; ++step) {
                    const bool in_alpha =
                        std::find(sf.alpha.begin(), sf.alpha.end(), step) !=
                        sf.alpha.end();
                    if (in_alpha)
                        ++ia;
                    else
                        ++ib;
                    cell.push_back(sig[ia] * stride + tau[ib]);
                }
                facets.push_back(std::move(cell));
            }
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return SimplicialSet(name, facets);
}

SimplicialSet torus_9() {
    const SimplicialSet circle = boundary_delta(2);
    return product_complex(circle, circle, "torus_9");
}

SimplicialSet s2_x_s2() {
    const SimplicialSet s2 = boundary_delta(3);
    return product_complex(s2, s2, "s2_x_s2");
}

SimplicialSet fixture(const std::string& name) {
    if (name == "rp2") return rp2_6();
    if (name == "torus") return torus_7();
    if (name == "torus9") return torus_9();
    if (name == "s2xs2") return s2_x_s2();
    if (name.rfind("delta", 0) == 0 && name.size() > 5)
        return delta(std::stoi(name.substr(5)));
    if (name.rfind("boundary_delta", 0) == 0 && name.size() > 14)
        return boundary_delta(std::stoi(name.substr(14)));
    throw std::out_of_range("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"rp2", "torus", "torus9", "s2xs2", "delta<n>", "boundary_delta<n>"};
}

}  // namespace adem
