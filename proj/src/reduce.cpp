#include "adem/reduce.hpp"

#include <algorithm>

namespace adem {

HomologySummary homology(const SimplicialSet& K, bool mod2) {
    const int D = K.dim();
    HomologySummary out;
    out.mod2 = mod2;
    out.betti.assign(D + 1, 0);
    out.torsion.assign(D + 1, {});

    std::vector<std::size_t> rank(D + 2, 0);
    if (mod2) {
        for (int n = 1; n <= D; ++n) rank[n] = mod2_rank(boundary_matrix<Z2Ring>(K, n));
    } else {
        for (int n = 1; n <= D; ++n) {
            SnfResult s = smith_normal_form(boundary_matrix<ZRing>(K, n));
            rank[n] = s.rank;
            if (n >= 1) out.torsion[n - 1] = s.torsion();
        }
    }
    for (int n = 0; n <= D; ++n)
        out.betti[n] = K.n_simplices(n) - rank[n] - rank[n + 1];
    return out;
}

namespace {

template <class R>
std::vector<std::size_t> alive_indices(const std::vector<char>& alive) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) idx.push_back(i);
    return idx;
}

}  // namespace

template <class R>
ContractionT<R> contraction(const SimplicialSet& K) {
    using elem = typename R::elem;
    const int D = K.dim();
    std::vector<std::size_t> m(D + 2, 0);
    for (int n = 0; n <= D; ++n) m[n] = K.n_simplices(n);

    // W[n] = current differential C_n -> C_{n-1}; W[0] and W[D+1] are empty.
    std::vector<Mat<R>> W(D + 2);
    W[0] = Mat<R>(0, m[0]);
    for (int n = 1; n <= D; ++n) W[n] = boundary_matrix<R>(K, n);
    W[D + 1] = Mat<R>(m[D], 0);

    std::vector<std::vector<char>> alive(D + 1);
    for (int n = 0; n <= D; ++n) alive[n].assign(m[n], 1);

    std::vector<Mat<R>> F(D + 1), G(D + 1), Phi(D + 1);
    for (int n = 0; n <= D; ++n) {
        F[n] = Mat<R>::identity(m[n]);
        G[n] = Mat<R>::identity(m[n]);
        Phi[n] = Mat<R>(n + 1 <= D ? m[n + 1] : 0, m[n]);
    }

    // Eliminates the pair (u in C_n, v in C_{n-1}) with unit pivot W[n](v,u),
    // composing the elementary contraction into (F, G, Phi).
    auto eliminate = [&](int n, std::size_t v, std::size_t u) {
        const elem eps = W[n](v, u);
        const elem epsinv = R::inv(eps);

        std::vector<elem> du(m[n - 1]), rv(m[n]), gu(m[n]), fv(m[n - 1]);
        for (std::size_t r = 0; r < m[n - 1]; ++r) du[r] = W[n](r, u);
        for (std::size_t y = 0; y < m[n]; ++y) rv[y] = W[n](v, y);
        for (std::size_t r = 0; r < m[n]; ++r) gu[r] = G[n](r, u);
        for (std::size_t c = 0; c < m[n - 1]; ++c) fv[c] = F[n - 1](v, c);

        // phi += g phi_e f with phi_e = -eps^{-1} E_{u,v}
        for (std::size_t r = 0; r < m[n]; ++r) {
            if (R::is_zero(gu[r])) continue;
            const elem coef = R::neg(R::mul(epsinv, gu[r]));
            for (std::size_t c = 0; c < m[n - 1]; ++c) {
                if (R::is_zero(fv[c])) continue;
                Phi[n - 1](r, c) = R::add(Phi[n - 1](r, c), R::mul(coef, fv[c]));
            }
        }
        // f on C_{n-1}: v maps to -eps^{-1}(du - eps v)
        for (std::size_t w = 0; w < m[n - 1]; ++w) {
            if (w == v || R::is_zero(du[w])) continue;
            const elem coef = R::mul(epsinv, du[w]);
            for (std::size_t c = 0; c < m[n - 1]; ++c)
                F[n - 1](w, c) =
                    R::add(F[n - 1](w, c), R::neg(R::mul(coef, fv[c])));
        }
        for (std::size_t c = 0; c < m[n - 1]; ++c) F[n - 1](v, c) = R::zero();
        for (std::size_t c = 0; c < m[n]; ++c) F[n](u, c) = R::zero();
        // g on C_n: y maps to y - eps^{-1} <dy,v> u
        for (std::size_t y = 0; y < m[n]; ++y) {
            if (y == u || R::is_zero(rv[y])) continue;
            const elem coef = R::mul(epsinv, rv[y]);
            for (std::size_t r = 0; r < m[n]; ++r)
                G[n](r, y) = R::add(G[n](r, y), R::neg(R::mul(coef, gu[r])));
        }
        for (std::size_t r = 0; r < m[n]; ++r) G[n](r, u) = R::zero();
        for (std::size_t r = 0; r < m[n - 1]; ++r) G[n - 1](r, v) = R::zero();
        // W[n] column elimination
        for (std::size_t y = 0; y < m[n]; ++y) {
            if (y == u || R::is_zero(rv[y])) continue;
            const elem coef = R::mul(epsinv, rv[y]);
            for (std::size_t r = 0; r < m[n - 1]; ++r)
                W[n](r, y) = R::add(W[n](r, y), R::neg(R::mul(coef, du[r])));
        }
        for (std::size_t y = 0; y < m[n]; ++y) W[n](v, y) = R::zero();
        for (std::size_t r = 0; r < m[n - 1]; ++r) W[n](r, u) = R::zero();
        for (std::size_t y = 0; y < W[n + 1].cols(); ++y) W[n + 1](u, y) = R::zero();
        if (n >= 2)
            for (std::size_t r = 0; r < W[n - 1].rows(); ++r) W[n - 1](r, v) = R::zero();
        alive[n][u] = 0;
        alive[n - 1][v] = 0;
    };

    // First unit entry in row-major order (deterministic pivot rule).
    auto find_pivot = [&](int n, std::size_t& v, std::size_t& u) -> bool {
        for (std::size_t r = 0; r < m[n - 1]; ++r) {
            if (!alive[n - 1][r]) continue;
            for (std::size_t c = 0; c < m[n]; ++c) {
                if (!alive[n][c]) continue;
                if (R::is_unit(W[n](r, c))) {
                    v = r;
                    u = c;
                    return true;
                }
            }
        }
        return false;
    };

    int n = 1;
    while (n <= D) {
        std::size_t v = 0, u = 0;
        while (find_pivot(n, v, u)) eliminate(n, v, u);

        // Over Z the remaining block may be nonzero: either a change of basis
        // exposes more unit pivots or there is genuine torsion.
        const auto ra = alive_indices<R>(alive[n - 1]);
        const auto ca = alive_indices<R>(alive[n]);
        Mat<R> B(ra.size(), ca.size());
        bool nonzero = false;
        for (std::size_t i = 0; i < ra.size(); ++i)
            for (std::size_t j = 0; j < ca.size(); ++j) {
                B(i, j) = W[n](ra[i], ca[j]);
                if (!R::is_zero(B(i, j))) nonzero = true;
            }
        if (!nonzero) {
            ++n;
            continue;
        }
        if constexpr (R::mod2) {
            throw std::logic_error("mod-2 elimination stalled on a nonzero block");
        } else {
            SnfResult s = smith_normal_form(B);
            bool has_unit = false;
            for (std::size_t t = 0; t < s.rank; ++t)
                if (s.S(t, t) == 1) has_unit = true;
            if (!has_unit) {
                for (std::size_t t = 0; t < s.rank; ++t)
                    if (s.S(t, t) > 1) throw TorsionError(n - 1, s.S(t, t));
                throw std::logic_error("stalled SNF block without diagonal entries");
            }
            // Change the alive bases so that the block becomes S = U B V:
            // C_n by V (coordinates by V^{-1}), C_{n-1} by U^{-1}
            // (coordinates by U).  Phi is expressed in original coordinates
            // and is unaffected.
            auto mix_cols = [](Mat<R>& M, const std::vector<std::size_t>& idx,
                               const IntMatrix& T) {
                for (std::size_t r = 0; r < M.rows(); ++r) {
                    std::vector<elem> nw(idx.size(), R::zero());
                    for (std::size_t j = 0; j < idx.size(); ++j)
                        for (std::size_t k = 0; k < idx.size(); ++k)
                            nw[j] = R::add(nw[j], R::mul(M(r, idx[k]), T(k, j)));
                    for (std::size_t j = 0; j < idx.size(); ++j) M(r, idx[j]) = nw[j];
                }
            };
            auto mix_rows = [](Mat<R>& M, const std::vector<std::size_t>& idx,
                               const IntMatrix& T) {
                for (std::size_t c = 0; c < M.cols(); ++c) {
                    std::vector<elem> nw(idx.size(), R::zero());
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        for (std::size_t k = 0; k < idx.size(); ++k)
                            nw[i] = R::add(nw[i], R::mul(T(i, k), M(idx[k], c)));
                    for (std::size_t i = 0; i < idx.size(); ++i) M(idx[i], c) = nw[i];
                }
            };
            mix_cols(G[n], ca, s.V);
            mix_rows(F[n], ca, s.Vinv);
            mix_rows(W[n + 1], ca, s.Vinv);
            mix_cols(G[n - 1], ra, s.Uinv);
            mix_rows(F[n - 1], ra, s.U);
            if (n >= 2) mix_cols(W[n - 1], ra, s.Uinv);
            for (std::size_t i = 0; i < ra.size(); ++i)
                for (std::size_t j = 0; j < ca.size(); ++j)
                    W[n](ra[i], ca[j]) = s.S(i, j);
            n = std::max(1, n - 1);
        }
    }

    ContractionT<R> out;
    out.K = &K;
    out.d.resize(D + 1);
    out.d[0] = Mat<R>(0, m[0]);
    for (int k = 1; k <= D; ++k) out.d[k] = boundary_matrix<R>(K, k);
    out.f.resize(D + 1);
    out.g.resize(D + 1);
    out.phi = std::move(Phi);
    for (int k = 0; k <= D; ++k) {
        const auto idx = alive_indices<R>(alive[k]);
        Mat<R> fk(idx.size(), m[k]), gk(m[k], idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t c = 0; c < m[k]; ++c) {
                fk(i, c) = F[k](idx[i], c);
                gk(c, i) = G[k](c, idx[i]);
            }
        out.f[k] = std::move(fk);
        out.g[k] = std::move(gk);
    }
    return out;
}

template ContractionT<ZRing> contraction<ZRing>(const SimplicialSet&);
template ContractionT<Z2Ring> contraction<Z2Ring>(const SimplicialSet&);

Reducer::Reducer(const SimplicialSet& K)
    : K_(&K), c2_(contraction<Z2Ring>(K)), cup2_(K), cupz_(K), ev_(K) {}

const ContractionT<ZRing>& Reducer::ctrz() {
    if (!cz_) cz_ = contraction<ZRing>(*K_);
    return *cz_;
}

Mod2Matrix Reducer::sq_matrix(int q, int i, bool via_z_lift) {
    const std::size_t domain = via_z_lift ? ctrz().betti(q) : c2_.betti(q);
    const std::size_t target = c2_.betti(q + i);
    Mod2Matrix M(target, domain);
    if (i < 0 || i > q) return M;
    for (std::size_t j = 0; j < domain; ++j) {
        Cochain<Z2Ring> c =
            via_z_lift ? reduce_mod2(g_star_generator(ctrz(), q, j))
                       : g_star_generator(c2_, q, j);
        const auto col = f_star(c2_, cup2_.cup(c, c, q - i));
        for (std::size_t r = 0; r < target; ++r) M(r, j) = col[r];
    }
    return M;
}

AdemResult Reducer::psi(int q) {
    if (q < 2) throw std::invalid_argument("psi needs q >= 2");
    const int i = q - 2;
    const auto& rz = ctrz();

    AdemResult res;
    res.q = q;
    res.hq_rank = rz.betti(q);
    if (res.hq_rank == 0) return res;

    // Integral generator cocycles and the Sq^2 matrix (steps 1-2).
    std::vector<Cochain<ZRing>> gens;
    for (std::size_t j = 0; j < res.hq_rank; ++j)
        gens.push_back(g_star_generator(rz, q, j));
    const Mod2Matrix M = sq_matrix(q, 2, true);

    // Kernel generators (step 3).
    res.kernel = mod2_kernel_basis(M);

    for (const auto& beta : res.kernel) {
        // step 4: c = g*(beta) over Z
        Cochain<ZRing> c(*K_, q);
        for (std::size_t j = 0; j < beta.size(); ++j)
            if (beta[j]) c += gens[j];
        const Cochain<Z2Ring> c2 = reduce_mod2(c);

        const Cochain<Z2Ring> u2 = cup2_.cup(c2, c2, i);
        if (!coboundary(u2).is_zero())
            throw std::logic_error("psi: c cup_i c is not a mod-2 cocycle");
        for (const auto& coord : f_star(c2_, u2))
            if (coord)
                throw std::logic_error("psi: c cup_i c is not a mod-2 coboundary");
        const Cochain<Z2Ring> b = phi_star(c2_, u2);
        if (!(coboundary(b) == u2))
            throw std::logic_error("psi: delta b != c cup_i c");

        // eta(c) = (c cup_{i+2} c + c)/2 over Z; every entry must be even.
        const Cochain<ZRing> cz_cup = cupz_.cup(c, c, i + 2);
        Cochain<ZRing> eta(*K_, q);
        for (std::size_t k = 0; k < eta.size(); ++k) {
            ZRing::elem v = cz_cup.at(k) + c.at(k);
            if (v % 2 != 0)
                throw std::logic_error("psi: eta integrality failed (odd entry)");
            eta.at(k) = v / 2;
        }
        const Cochain<Z2Ring> eta2 = reduce_mod2(eta);

        // step 5: w = b u_{i+1} b + b u_{i+2} db + E_{3i+3}(c^4)
        //             + eta u_{i-1} eta + eta u_i d(eta)
        Cochain<Z2Ring> w = cup2_.cup(b, b, i + 1);
        w += cup2_.cup(b, coboundary(b), i + 2);
        w += ev_.adem_E_cochain(i, c);
        if (i >= 1) w += cup2_.cup(eta2, eta2, i - 1);
        w += cup2_.cup(eta2, coboundary(eta2), i);

        if (!coboundary(w).is_zero())
            throw std::logic_error("psi: w is not a mod-2 cocycle");
        res.classes.push_back(f_star(c2_, w));
        res.w.push_back(std::move(w));
    }

    // Indeterminacy Sq^2 H^{q+1}(K;Z) as a subspace basis of H^{q+3}(K;Z_2).
    res.indeterminacy = mod2_column_space_basis(sq_matrix(q + 1, 2, true));
    return res;
}

}  // namespace adem
