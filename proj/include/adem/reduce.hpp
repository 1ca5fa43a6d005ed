#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adem/adem_ops.hpp"
#include "adem/cochain.hpp"
#include "adem/cup.hpp"
#include "adem/matrix.hpp"

namespace adem {

// Boundary matrix d_n : C_n -> C_{n-1} over the canonical bases.
template <class R>
Mat<R> boundary_matrix(const SimplicialSet& K, int n) {
    Mat<R> M(K.n_simplices(n - 1), K.n_simplices(n));
    for (std::size_t xi = 0; xi < K.n_simplices(n); ++xi) {
        const Simplex& x = K.simplex(n, xi);
        for (int i = 0; i <= x.dim(); ++i) {
            const std::size_t r = K.index_of(x.face(i));
            M(r, xi) = R::add(M(r, xi), R::from_sign(i));
        }
    }
    return M;
}

struct HomologySummary {
    bool mod2 = false;
    std::vector<std::size_t> betti;                 // degrees 0..dim
    std::vector<std::vector<ZRing::elem>> torsion;  // torsion of H_n (empty over Z/2)
};

HomologySummary homology(const SimplicialSet& K, bool mod2);

class TorsionError : public std::runtime_error {
public:
    TorsionError(int degree, ZRing::elem coefficient)
        : std::runtime_error("integral homology has torsion Z/" +
                             coefficient.str() + " in degree " +
                             std::to_string(degree)),
          degree_(degree), coefficient_(std::move(coefficient)) {}
    int degree() const { return degree_; }
    const ZRing::elem& coefficient() const { return coefficient_; }

private:
    int degree_;
    ZRing::elem coefficient_;
};

// A contraction (f, g, phi) of C(K) onto its homology, built by unit-pivot
// elimination of the boundary matrices.  All matrices are indexed by the
// canonical simplex bases; f g = 1, phi d + d phi = g f - 1, phi g = 0,
// f phi = 0, phi phi = 0 hold exactly.
template <class R>
struct ContractionT {
    const SimplicialSet* K = nullptr;
    std::vector<Mat<R>> d;    // d[n]: m_{n-1} x m_n (n = 0 entry is 0 x m_0)
    std::vector<Mat<R>> f;    // f[n]: h_n x m_n
    std::vector<Mat<R>> g;    // g[n]: m_n x h_n
    std::vector<Mat<R>> phi;  // phi[n]: m_{n+1} x m_n

    int top_dim() const { return static_cast<int>(f.size()) - 1; }
    std::size_t betti(int n) const {
        return (n < 0 || n > top_dim()) ? 0 : f[n].rows();
    }
};

// Over Z this throws TorsionError when integral homology has torsion;
// over Z/2 it always succeeds.
template <class R>
ContractionT<R> contraction(const SimplicialSet& K);

// ----- dual contraction (f*, g*, phi*) on cochains ------------------------
// f*(c) = c o g, g*(h) = h o f, phi*(c) = (-1)^{n+1} c o phi for c in C^n.
// With this sign every coboundary satisfies c = delta phi*(c); the homotopy
// identity takes the form phi* delta + delta phi* = 1 - g* f*.

template <class R>
std::vector<typename R::elem> f_star(const ContractionT<R>& r, const Cochain<R>& c) {
    const int n = c.degree();
    std::vector<typename R::elem> out(r.betti(n), R::zero());
    if (n < 0 || n > r.top_dim()) return out;
    for (std::size_t j = 0; j < out.size(); ++j) {
        typename R::elem acc = R::zero();
        for (std::size_t x = 0; x < c.size(); ++x)
            acc = R::add(acc, R::mul(c.at(x), r.g[n](x, j)));
        out[j] = acc;
    }
    return out;
}

template <class R>
Cochain<R> g_star(const ContractionT<R>& r, int degree,
                  const std::vector<typename R::elem>& h) {
    Cochain<R> out(*r.K, degree);
    if (degree < 0 || degree > r.top_dim()) return out;
    for (std::size_t x = 0; x < out.size(); ++x) {
        typename R::elem acc = R::zero();
        for (std::size_t j = 0; j < h.size(); ++j)
            acc = R::add(acc, R::mul(h[j], r.f[degree](j, x)));
        out.at(x) = acc;
    }
    return out;
}

template <class R>
Cochain<R> g_star_generator(const ContractionT<R>& r, int degree, std::size_t j) {
    std::vector<typename R::elem> h(r.betti(degree), R::zero());
    h[j] = R::one();
    return g_star(r, degree, h);
}

template <class R>
Cochain<R> phi_star(const ContractionT<R>& r, const Cochain<R>& c) {
    const int n = c.degree();
    Cochain<R> out(*r.K, n - 1);
    if (n < 1 || n - 1 > r.top_dim()) return out;
    const auto sgn = R::from_sign(n + 1);
    for (std::size_t y = 0; y < out.size(); ++y) {
        typename R::elem acc = R::zero();
        for (std::size_t x = 0; x < c.size(); ++x)
            acc = R::add(acc, R::mul(c.at(x), r.phi[n - 1](x, y)));
        out.at(y) = R::mul(sgn, acc);
    }
    return out;
}

// ----- the Algorithm-5 pipeline --------------------------------------------

struct AdemResult {
    int q = 0;
    std::size_t hq_rank = 0;  // rank of H^q(K;Z)
    // Kernel generators beta_j of Sq^2 in the H^q generator coordinates.
    std::vector<std::vector<std::uint8_t>> kernel;
    // The mod-2 cocycles w_j and their classes f*(w_j) in H^{q+3}(K;Z_2).
    std::vector<Cochain<Z2Ring>> w;
    std::vector<std::vector<std::uint8_t>> classes;
    // Basis of the indeterminacy subspace Sq^2 H^{q+1}(K;Z).
    std::vector<std::vector<std::uint8_t>> indeterminacy;
};

// Shared per-complex state for the cohomology-operation pipeline: the Z and
// Z/2 contractions plus cup and Adem evaluators with their caches.
class Reducer {
public:
    explicit Reducer(const SimplicialSet& K);

    const SimplicialSet& complex() const { return *K_; }
    const ContractionT<Z2Ring>& ctr2() const { return c2_; }
    // Throws TorsionError when integral homology has torsion.
    const ContractionT<ZRing>& ctrz();

    CupCalculator<Z2Ring>& cup2() { return cup2_; }
    CupCalculator<ZRing>& cupz() { return cupz_; }
    AdemEvaluator& evaluator() { return ev_; }

    // Matrix of Sq^i : H^q -> H^{q+i} over Z/2.  With via_z_lift the domain
    // generators are integral (Algorithm 5 step 2); otherwise everything is
    // mod 2.
    Mod2Matrix sq_matrix(int q, int i, bool via_z_lift);

    // Algorithm 5 for Psi_q (q >= 2, i = q-2).
    AdemResult psi(int q);

private:
    const SimplicialSet* K_;
    ContractionT<Z2Ring> c2_;
    std::optional<ContractionT<ZRing>> cz_;
    CupCalculator<Z2Ring> cup2_;
    CupCalculator<ZRing> cupz_;
    AdemEvaluator ev_;
};

}  // namespace adem
