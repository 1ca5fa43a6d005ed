#include "adem/cochain.hpp"

#include <random>

#include "adem/matrix.hpp"

namespace adem {

namespace {

// Matrix of delta^n : C^n -> C^{n+1} over the canonical bases.
template <class R>
Mat<R> delta_matrix(const SimplicialSet& K, int n) {
    Mat<R> M(K.n_simplices(n + 1), K.n_simplices(n));
    for (std::size_t yi = 0; yi < K.n_simplices(n + 1); ++yi) {
        const Simplex& y = K.simplex(n + 1, yi);
        for (int i = 0; i <= y.dim(); ++i) {
            const Simplex f = y.face(i);
            if (f.is_degenerate()) continue;
            const std::size_t xi = K.index_of(f);
            M(yi, xi) = R::add(M(yi, xi), R::from_sign(n + 1 + i));
        }
    }
    return M;
}

}  // namespace

template <>
Cochain<Z2Ring> random_cocycle<Z2Ring>(const SimplicialSet& K, int degree,
                                       std::uint64_t seed) {
    Cochain<Z2Ring> c(K, degree);
    const auto basis = mod2_kernel_basis(delta_matrix<Z2Ring>(K, degree));
    std::mt19937_64 rng(seed);
    for (const auto& v : basis) {
        if (rng() & 1)
            for (std::size_t i = 0; i < c.size(); ++i) c.at(i) ^= v[i];
    }
    return c;
}

template <>
Cochain<ZRing> random_cocycle<ZRing>(const SimplicialSet& K, int degree,
                                     std::uint64_t seed) {
    Cochain<ZRing> c(K, degree);
    const auto basis = int_kernel_basis(delta_matrix<ZRing>(K, degree));
    std::mt19937_64 rng(seed);
    for (const auto& v : basis) {
        const long coeff = static_cast<long>(rng() % 7) - 3;
        if (coeff == 0) continue;
        for (std::size_t i = 0; i < c.size(); ++i)
            c.at(i) += ZRing::from_int(coeff) * v[i];
    }
    return c;
}

template <>
Cochain<Z2Ring> random_cochain<Z2Ring>(const SimplicialSet& K, int degree,
                                       std::uint64_t seed) {
    Cochain<Z2Ring> c(K, degree);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < c.size(); ++i) c.at(i) = rng() & 1;
    return c;
}

template <>
Cochain<ZRing> random_cochain<ZRing>(const SimplicialSet& K, int degree,
                                     std::uint64_t seed) {
    Cochain<ZRing> c(K, degree);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < c.size(); ++i)
        c.at(i) = ZRing::from_int(static_cast<long>(rng() % 7) - 3);
    return c;
}

}  // namespace adem
