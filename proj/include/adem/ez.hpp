#pragma once

#include <vector>

#include <boost/container/small_vector.hpp>

#include "adem/chain.hpp"
#include "adem/rings.hpp"
#include "adem/simplex.hpp"

namespace adem {

// A (p,q)-shuffle: a partition of {0,...,p+q-1} into increasing sequences
// alpha (size p) and beta (size q).
struct ShufflePartition {
    using Index = boost::container::small_vector<int, 8>;
    Index alpha, beta;
    int signature = 0;  // sum over i of alpha_i - (i-1)
};

// All C(p+q, p) shuffles, ordered by the alpha subset in lexicographic
// order; memoized (the operators below enumerate them heavily).
const std::vector<ShufflePartition>& shuffles(int p, int q);

inline P2 diag2(const Simplex& x) { return P2(x, x); }
inline P4 diag4(const Simplex& x) { return make_p4(x, x, x, x); }

// Front i-face (keep positions 0..i) and back face (keep positions i..m).
template <class C>
C front_face(const C& x, int i) {
    const int m = x.dim();
    return (i < m) ? x.remove_range(i + 1, m) : x;
}
template <class C>
C back_face(const C& x, int i) {
    return (i > 0) ? x.remove_range(0, i - 1) : x;
}

// ---------------------------------------------------------------------------
// Eilenberg-Zilber contraction (Aw, Em, Sh) of C(K x L) to C(K) (x) C(L),
// generic over the factor cell type so the same code drives both K x K and
// (K^{x2}) x (K^{x2}).
// ---------------------------------------------------------------------------

// Aw(x,y) = sum_i front_i(x) (x) back_i(y).
template <class R, class C>
Chain<Tens2<C, C>, R> aw_cell(const Prod<C>& cell, bool drop = true) {
    Chain<Tens2<C, C>, R> out(drop);
    const int m = cell.dim();
    for (int i = 0; i <= m; ++i)
        out.add(Tens2<C, C>{front_face(cell.a, i), back_face(cell.b, i)}, R::one());
    return out;
}

// Repeat-position mask of s_{b_k}..s_{b_1} x, computed from x's mask alone:
// inserted positions are repeats, the rest lift x's repeats.
inline std::uint32_t lifted_rep_mask(std::uint32_t rep, const int* ins, int n_ins,
                                     int out_dim) {
    std::uint32_t mask = 0;
    int cnt = 0;
    for (int m = 0; m < out_dim; ++m) {
        if (cnt < n_ins && ins[cnt] == m) {
            mask |= (1u << m);
            ++cnt;
        } else if (rep & (1u << (m - cnt))) {
            mask |= (1u << m);
        }
    }
    return mask;
}

// Em(x_p (x) y_q) = sum over (p,q)-shuffles of (-1)^sig (s_beta x, s_alpha y).
template <class R, class C>
Chain<Prod<C>, R> em_tensor(const C& x, const C& y, bool drop = true) {
    Chain<Prod<C>, R> out(drop);
    const int p = x.dim(), q = y.dim();
    const std::uint32_t rx = x.rep_mask(), ry = y.rep_mask();
    for (const auto& sf : shuffles(p, q)) {
        if (drop &&
            (lifted_rep_mask(rx, sf.beta.data(), q, p + q) &
             lifted_rep_mask(ry, sf.alpha.data(), p, p + q)))
            continue;
        Prod<C> cell;
        cell.a = x.multi_degeneracy(sf.beta.begin(), sf.beta.end());
        cell.b = y.multi_degeneracy(sf.alpha.begin(), sf.alpha.end());
        out.add(cell, R::from_sign(sf.signature));
    }
    return out;
}

// Shih homotopy.  Summands are indexed by p,q >= 0 with p+q <= m-1 and a
// (p+1,q)-shuffle (alpha,beta); with mb = m-p-q,
//   (-1)^{mb+sig+1} ( s_{beta_q+mb}..s_{beta_1+mb}s_{mb-1} d_{m-q+1}..d_m x,
//                     s_{alpha_{p+1}+mb}..s_{alpha_1+mb} d_{mb}..d_{m-q-1} y ).
// With tilde=true only the summands with beta_q < alpha_1 are kept.
template <class R, class C>
Chain<Prod<C>, R> sh_cell(const Prod<C>& cell, bool drop = true, bool tilde = false) {
    Chain<Prod<C>, R> out(drop);
    const int m = cell.dim();
    boost::container::small_vector<int, 12> degx, degy;
    for (int q = 0; q <= m - 1; ++q) {
        for (int p = 0; p + q <= m - 1; ++p) {
            const int mb = m - p - q;
            const C fx = (q > 0) ? cell.a.remove_range(m - q + 1, m) : cell.a;
            const C fy = (p > 0) ? cell.b.remove_range(mb, m - q - 1) : cell.b;
            const std::uint32_t rx = fx.rep_mask(), ry = fy.rep_mask();
            for (const auto& sf : shuffles(p + 1, q)) {
                if (tilde && !sf.beta.empty() && sf.beta.back() >= sf.alpha.front())
                    continue;
                degx.clear();
                degx.push_back(mb - 1);
                for (int b : sf.beta) degx.push_back(b + mb);
                degy.clear();
                for (int a : sf.alpha) degy.push_back(a + mb);
                if (drop && (lifted_rep_mask(rx, degx.data(), q + 1, m + 1) &
                             lifted_rep_mask(ry, degy.data(), p + 1, m + 1)))
                    continue;
                Prod<C> res;
                res.a = fx.multi_degeneracy(degx.begin(), degx.end());
                res.b = fy.multi_degeneracy(degy.begin(), degy.end());
                out.add(res, R::from_sign(mb + sf.signature + 1));
            }
        }
    }
    return out;
}

// Linear extensions.
template <class R, class C>
Chain<Tens2<C, C>, R> aw(const Chain<Prod<C>, R>& ch) {
    Chain<Tens2<C, C>, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms())
        out.add(aw_cell<R, C>(cell, ch.drops_degenerate()), c);
    return out;
}

template <class R, class C>
Chain<Prod<C>, R> em(const Chain<Tens2<C, C>, R>& ch) {
    Chain<Prod<C>, R> out(ch.drops_degenerate());
    for (const auto& [t, c] : ch.terms())
        out.add(em_tensor<R, C>(t.a, t.b, ch.drops_degenerate()), c);
    return out;
}

template <class R, class C>
Chain<Prod<C>, R> sh(const Chain<Prod<C>, R>& ch, bool tilde = false) {
    Chain<Prod<C>, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms())
        out.add(sh_cell<R, C>(cell, ch.drops_degenerate(), tilde), c);
    return out;
}

// Transposition of the two product coordinates (a simplicial map; no sign).
template <class R, class C>
Chain<Prod<C>, R> perm_t2_swap(const Chain<Prod<C>, R>& ch) {
    Chain<Prod<C>, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms()) {
        Prod<C> w;
        w.a = cell.b;
        w.b = cell.a;
        out.add(w, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arity-4 objects: cells of K^{x4} bracketed as ((x1,x2),(x3,x4)).
// ---------------------------------------------------------------------------

inline std::array<Simplex, 4> flatten(const P4& cell) {
    return {cell.a.a, cell.a.b, cell.b.a, cell.b.b};
}
inline P4 unflatten(const std::array<Simplex, 4>& f) {
    return make_p4(f[0], f[1], f[2], f[3]);
}

// Coordinate permutations on C(K^{x4}): z = (x1,x3,x2,x4),
// t2 = (x2,x1,x4,x3), t = (x3,x4,x1,x2).
enum class Perm4 { z, t2, t };

inline P4 apply_perm(Perm4 p, const P4& cell) {
    const auto f = flatten(cell);
    switch (p) {
        case Perm4::z: return make_p4(f[0], f[2], f[1], f[3]);
        case Perm4::t2: return make_p4(f[1], f[0], f[3], f[2]);
        default: return make_p4(f[2], f[3], f[0], f[1]);
    }
}

template <class R>
Chain<P4, R> perm4(Perm4 p, const Chain<P4, R>& ch) {
    Chain<P4, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms()) out.add(apply_perm(p, cell), c);
    return out;
}

// Tensor permutations with Koszul signs:
// T: y3 (x) y4 (x) y1 (x) y2,  T2: y2 (x) y1 (x) y4 (x) y3,
// z': y1 (x) y3 (x) y2 (x) y4.
enum class TensPerm4 { zp, T2, T };

template <class R>
Chain<Tens4, R> tensor_perm4(TensPerm4 p, const Chain<Tens4, R>& ch) {
    Chain<Tens4, R> out(ch.drops_degenerate());
    for (const auto& [t, c] : ch.terms()) {
        const int d1 = t.f[0].dim(), d2 = t.f[1].dim(), d3 = t.f[2].dim(),
                  d4 = t.f[3].dim();
        Tens4 w;
        int parity = 0;
        switch (p) {
            case TensPerm4::zp:
                w.f = {t.f[0], t.f[2], t.f[1], t.f[3]};
                parity = d2 * d3;
                break;
            case TensPerm4::T2:
                w.f = {t.f[1], t.f[0], t.f[3], t.f[2]};
                parity = d1 * d2 + d3 * d4;
                break;
            default:
                w.f = {t.f[2], t.f[3], t.f[0], t.f[1]};
                parity = (d1 + d2) * (d3 + d4);
                break;
        }
        out.add(w, R::mul(c, R::from_sign(parity)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Composite contraction of C(K^{x4}) to C(K)^{(x)4}:
//   Aw4 = (Aw (x) Aw) Aw,  Em4 = Em (Em (x) Em),
//   Sh4 = Sh + Em (Sh (x) EmAw + 1 (x) Sh) Aw.
// ---------------------------------------------------------------------------

template <class R>
Chain<Tens4, R> aw4(const Chain<P4, R>& ch) {
    Chain<Tens4, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms()) {
        const auto outer = aw_cell<R, P2>(cell, ch.drops_degenerate());
        for (const auto& [uv, cuv] : outer.terms()) {
            const auto left = aw_cell<R, Simplex>(uv.a, ch.drops_degenerate());
            const auto right = aw_cell<R, Simplex>(uv.b, ch.drops_degenerate());
            for (const auto& [lt, cl] : left.terms())
                for (const auto& [rt, cr] : right.terms())
                    out.add(Tens4{{lt.a, lt.b, rt.a, rt.b}},
                            R::mul(R::mul(c, cuv), R::mul(cl, cr)));
        }
    }
    return out;
}

template <class R>
Chain<P4, R> em4(const Chain<Tens4, R>& ch) {
    Chain<P4, R> out(ch.drops_degenerate());
    for (const auto& [t, c] : ch.terms()) {
        const auto left = em_tensor<R, Simplex>(t.f[0], t.f[1], ch.drops_degenerate());
        const auto right = em_tensor<R, Simplex>(t.f[2], t.f[3], ch.drops_degenerate());
        for (const auto& [u, cu] : left.terms())
            for (const auto& [v, cv] : right.terms())
                out.add(em_tensor<R, P2>(u, v, ch.drops_degenerate()),
                        R::mul(c, R::mul(cu, cv)));
    }
    return out;
}

template <class R>
Chain<P4, R> sh4(const Chain<P4, R>& ch) {
    const bool drop = ch.drops_degenerate();
    Chain<P4, R> out = sh(ch);
    for (const auto& [cell, c] : ch.terms()) {
        const auto split = aw_cell<R, P2>(cell, drop);
        for (const auto& [uv, cuv] : split.terms()) {
            const auto coeff = R::mul(c, cuv);
            // Sh(u) (x) EmAw(v): both maps land back in C(K^{x2}); Sh carries
            // degree +1 but sits in the left factor, so no Koszul sign.
            const auto shu = sh_cell<R, Simplex>(uv.a, drop);
            const auto emawv = em(aw_cell<R, Simplex>(uv.b, drop));
            for (const auto& [u2, cu] : shu.terms())
                for (const auto& [v2, cv] : emawv.terms())
                    out.add(em_tensor<R, P2>(u2, v2, drop),
                            R::mul(coeff, R::mul(cu, cv)));
            // 1 (x) Sh: Koszul sign (-1)^{|u|}.
            const auto shv = sh_cell<R, Simplex>(uv.b, drop);
            const auto sgn = R::from_sign(uv.a.dim());
            for (const auto& [v2, cv] : shv.terms())
                out.add(em_tensor<R, P2>(uv.a, v2, drop),
                        R::mul(R::mul(coeff, sgn), cv));
        }
    }
    return out;
}

}  // namespace adem
