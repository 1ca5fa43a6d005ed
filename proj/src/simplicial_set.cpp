#include "adem/simplex.hpp"

#include <set>

namespace adem {

SimplicialSet::SimplicialSet(std::string name, std::vector<std::vector<int>> maximal)
    : name_(std::move(name)), maximal_(std::move(maximal)) {
    if (maximal_.empty())
        throw std::invalid_argument("complex needs at least one maximal simplex");

    int top = 0;
    for (const auto& m : maximal_) {
        if (m.empty())
            throw std::invalid_argument("empty simplex in complex input");
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < 0 || m[i] > 255)
                throw std::invalid_argument("vertex id out of range [0,255]");
            if (i > 0 && m[i - 1] >= m[i])
                throw std::invalid_argument("maximal simplex is not strictly increasing");
        }
        top = std::max(top, static_cast<int>(m.size()) - 1);
    }

    // Face closure: every non-empty subset of a maximal simplex.
    std::vector<std::set<Simplex>> byd(top + 1);
    for (const auto& m : maximal_) {
        const std::size_t k = m.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Simplex::Storage w;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) w.push_back(static_cast<Vertex>(m[i]));
            Simplex s(std::move(w));
            byd[s.dim()].insert(std::move(s));
        }
    }

    basis_.resize(top + 1);
    index_.resize(top + 1);
    for (int d = 0; d <= top; ++d) {
        basis_[d].assign(byd[d].begin(), byd[d].end());  // set order = lexicographic
        for (std::size_t i = 0; i < basis_[d].size(); ++i)
            index_[d].emplace(basis_[d][i], i);
    }
}

std::size_t SimplicialSet::index_of(const Simplex& s) const {
    const int d = s.dim();
    if (d < 0 || d > dim())
        throw std::out_of_range("simplex dimension outside complex");
    auto it = index_[d].find(s);
    if (it == index_[d].end())
        throw std::out_of_range("simplex not in complex: " + s.str());
    return it->second;
}

bool SimplicialSet::contains(const Simplex& s) const {
    if (s.empty() || !s.is_monotone()) return false;
    const Simplex sup = s.support();
    const int d = sup.dim();
    if (d > dim()) return false;
    return index_[d].count(sup) > 0;
}

SimplicialSet build_complex(const std::string& name,
                            const std::vector<std::vector<int>>& maximal) {
    return SimplicialSet(name, maximal);
}

SimplicialSet delta(int n) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    return SimplicialSet("delta" + std::to_string(n), {all});
}

SimplicialSet boundary_delta(int n) {
    std::vector<std::vector<int>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialSet("boundary_delta" + std::to_string(n), facets);
}

}  // namespace adem
