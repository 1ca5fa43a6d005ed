#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "adem/cochain.hpp"
#include "adem/ez.hpp"

namespace adem {

// Evaluates cup-i products c cup_i c' = mu (c (x) c') D_i Delta with
// D_i = Aw (t Sh)^i, caching the chains (t Sh)^i (x,x) and their Aw images
// per simplex.
template <class R>
class CupCalculator {
public:
    using TChain = Chain<Tens2<Simplex, Simplex>, R>;

    explicit CupCalculator(const SimplicialSet& K) : K_(&K) {}
    const SimplicialSet& complex() const { return *K_; }

    const TChain& d_diag(int i, const Simplex& x) {
        if (i < 0) throw std::invalid_argument("cup index must be non-negative");
        grow(i);
        auto it = dcache_[i].find(x);
        if (it != dcache_[i].end()) return it->second;
        TChain d = aw(tsh_diag(i, x));
        return dcache_[i].emplace(x, std::move(d)).first->second;
    }

    typename R::elem cup_value(const Cochain<R>& c, const Cochain<R>& cp, int i,
                               const Simplex& x) {
        typename R::elem acc = R::zero();
        for (const auto& [t, coeff] : d_diag(i, x).terms()) {
            if (t.a.dim() != c.degree() || t.b.dim() != cp.degree()) continue;
            acc = R::add(acc, R::mul(coeff, R::mul(c(t.a), cp(t.b))));
        }
        return acc;
    }

    Cochain<R> cup(const Cochain<R>& c, const Cochain<R>& cp, int i) {
        if (i < 0) throw std::invalid_argument("cup index must be non-negative");
        const int out_deg = c.degree() + cp.degree() - i;
        Cochain<R> out(*K_, out_deg);
        for (std::size_t k = 0; k < K_->n_simplices(out_deg); ++k)
            out.at(k) = cup_value(c, cp, i, K_->simplex(out_deg, k));
        return out;
    }

    // The four-factor product c cup_{k1} c cup_{k2} c cup_{k3} c, grouped as
    // (c cup_{k1} c) cup_{k2} (c cup_{k3} c).  This is the grouping realized
    // by mu c^{(x)4} (D_{k1} (x) D_{k3}) D_{k2} Delta, which is how these
    // expressions arise.  A stage whose index exceeds a factor degree is
    // null (cup-nullity), giving the zero cochain of the bookkept degree.
    Cochain<R> iterated_cup(const Cochain<R>& c, const std::array<int, 3>& ks) {
        const int q = c.degree();
        const int deg = 4 * q - ks[0] - ks[1] - ks[2];
        if (ks[0] < 0 || ks[0] > q || ks[2] < 0 || ks[2] > q)
            return Cochain<R>(*K_, deg);
        const Cochain<R> u = cup(c, c, ks[0]);
        const Cochain<R> v = cup(c, c, ks[2]);
        if (ks[1] < 0 || ks[1] > u.degree() || ks[1] > v.degree())
            return Cochain<R>(*K_, deg);
        return cup(u, v, ks[1]);
    }

private:
    void grow(int i) {
        if (static_cast<int>(stage_.size()) <= i) stage_.resize(i + 1);
        if (static_cast<int>(dcache_.size()) <= i) dcache_.resize(i + 1);
    }

    // (t Sh)^i applied to the diagonal cell (x,x).
    const Chain<P2, R>& tsh_diag(int i, const Simplex& x) {
        grow(i);
        auto it = stage_[i].find(x);
        if (it != stage_[i].end()) return it->second;
        Chain<P2, R> ch;
        if (i == 0) {
            ch.add(diag2(x), R::one());
        } else {
            ch = perm_t2_swap(sh(tsh_diag(i - 1, x)));
        }
        return stage_[i].emplace(x, std::move(ch)).first->second;
    }

    const SimplicialSet* K_;
    std::vector<std::unordered_map<Simplex, Chain<P2, R>, SimplexHash>> stage_;
    std::vector<std::unordered_map<Simplex, TChain, SimplexHash>> dcache_;
};

// The front-face/back-face cup product formula, independent of the
// D_0 = Aw route.
template <class R>
typename R::elem cup_direct_value(const Cochain<R>& c, const Cochain<R>& cp,
                                  const Simplex& x) {
    if (x.dim() != c.degree() + cp.degree())
        throw std::invalid_argument("cup_direct dimension mismatch");
    return R::mul(c(front_face(x, c.degree())), cp(back_face(x, c.degree())));
}

template <class R>
Cochain<R> cup_direct(const Cochain<R>& c, const Cochain<R>& cp) {
    const SimplicialSet& K = c.complex();
    const int deg = c.degree() + cp.degree();
    Cochain<R> out(K, deg);
    for (std::size_t k = 0; k < K.n_simplices(deg); ++k)
        out.at(k) = cup_direct_value(c, cp, K.simplex(deg, k));
    return out;
}

// Sq^i at cochain level: c cup_{j-i} c reduced mod 2 (j = deg c).  Requires
// a cocycle; indices outside 0 <= i <= j give the zero cochain by
// cup-nullity.
template <class R>
Cochain<Z2Ring> sq_cochain(CupCalculator<R>& calc, int i, const Cochain<R>& c) {
    if (!coboundary(c).is_zero())
        throw std::invalid_argument("Sq is defined on cocycles only");
    const int j = c.degree();
    if (i < 0 || i > j) return Cochain<Z2Ring>(calc.complex(), j + i);
    return reduce_mod2(calc.cup(c, c, j - i));
}

// The mod-2 residual of the coboundary formula for cup-i:
//   delta(c cup_i c') + c cup_{i-1} c' + c' cup_{i-1} c
//   + delta c cup_i c' + c cup_i delta c'.
// Identically zero for every pair of cochains and every i >= 1.
Cochain<Z2Ring> eq1_residual(CupCalculator<Z2Ring>& calc, const Cochain<Z2Ring>& c,
                             const Cochain<Z2Ring>& cp, int i);

}  // namespace adem
