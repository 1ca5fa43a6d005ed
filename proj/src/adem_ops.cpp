#include "adem/adem_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace adem {

Perm4 letter_perm(const GroupElement& g) {
    if (g == kA1) return Perm4::z;
    if (g == kA2) return Perm4::t2;
    if (g == kA3) return Perm4::t;
    throw std::invalid_argument("letter is not a1, a2 or a3");
}

std::vector<BarWord> bar_words(int i, int ell) {
    const int n = 3 * i + 2;
    if (ell < 0 || ell > n) throw std::out_of_range("ell outside [0, 3i+2]");
    std::vector<BarWord> words;
    for (const auto& sf : shuffles(n - ell, ell)) {
        // letter at position k of the shuffled multiset
        BarWord base(n);
        for (int a : sf.alpha) base[a] = kA2;  // (1,0)
        for (int b : sf.beta) base[b] = kA3;   // (0,1)
        for (int j = 0; j <= n; ++j) {
            BarWord w;
            w.reserve(n + 1);
            for (int k = 0; k < j; ++k) w.push_back(base[k]);
            w.push_back(kA1);
            for (int k = j; k < n; ++k) w.push_back(base[k].bar());
            words.push_back(std::move(w));
        }
    }
    return words;
}

std::vector<int> e_cases(int i) {
    if (i < 0) throw std::out_of_range("i must be non-negative");
    if (i == 0) return {0};
    if (i == 2 || i == 4) return {i, i - 1};
    if (i == 1 || i == 3 || i == 5) return {i};
    if (i % 2 == 0) return {i, i - 1, i - 2};
    // i >= 7 odd
    if (((i - 7) / 2) % 2 == 0) return {i};
    return {i, i - 2};
}

std::vector<std::array<int, 3>> e_cup_terms(int i) {
    switch (i) {
        case 0: return {{0, 1, 2}};
        case 1: return {{1, 2, 3}};
        case 2: return {{2, 3, 4}, {0, 7, 2}};
        case 3: return {{3, 4, 5}, {2, 7, 3}, {3, 8, 1}};
        case 4: return {{4, 5, 6}};
        case 5: return {{5, 6, 7}, {4, 9, 5}, {4, 11, 3}};
        default: break;
    }
    if (i % 2 == 0) {
        if (((i - 6) / 2) % 2 == 1) return {{i, i + 1, i + 2}};
        return {{i, i + 1, i + 2}, {i, i + 5, i - 2}};
    }
    return {{i, i + 1, i + 2}, {i, i + 4, i - 1}, {i, i + 5, i - 2}, {i - 1, i + 6, i - 2}};
}

const AdemEvaluator::Z2Chain& AdemEvaluator::sh4_cell(const P4& cell) {
    auto it = sh4_cache_.find(cell);
    if (it != sh4_cache_.end()) return it->second;
    Z2Chain one(drop_);
    one.add(cell, 1);
    return sh4_cache_.emplace(cell, sh4(one)).first->second;
}

const AdemEvaluator::TensorList& AdemEvaluator::aw4_cell(const P4& cell) {
    auto it = aw4_cache_.find(cell);
    if (it != aw4_cache_.end()) return it->second;
    Z2Chain one(drop_);
    one.add(cell, 1);
    const auto tens = aw4(one);
    TensorList terms;
    terms.reserve(tens.terms().size());
    for (const auto& [t, coeff] : tens.terms())
        if (coeff) terms.push_back(t);
    return aw4_cache_.emplace(cell, std::move(terms)).first->second;
}

AdemEvaluator::CellSet AdemEvaluator::block(Perm4 p, const CellSet& ch) {
    CellSet out;
    for (const auto& cell : ch) {
        for (const auto& [scell, scoeff] : sh4_cell(cell).terms()) {
            if (!scoeff) continue;
            P4 moved = apply_perm(p, scell);
            auto [it, inserted] = out.insert(std::move(moved));
            if (!inserted) out.erase(it);
        }
    }
    return out;
}

void AdemEvaluator::leaf_collect(const CellSet& chain, std::size_t mult, int q,
                                 std::map<Tens4, std::uint8_t>& acc) {
    if (!(mult & 1)) return;
    for (const auto& cell : chain) {
        for (const auto& t : aw4_cell(cell)) {
            if (q >= 0 && (t.f[0].dim() != q || t.f[1].dim() != q ||
                           t.f[2].dim() != q || t.f[3].dim() != q))
                continue;
            acc[t] ^= 1;
        }
    }
}

void AdemEvaluator::word_walk(std::vector<std::vector<Perm4>>& words, std::size_t lo,
                              std::size_t hi, std::size_t depth, const CellSet& chain,
                              int q, std::map<Tens4, std::uint8_t>& acc) {
    if (depth == words[lo].size()) {
        leaf_collect(chain, hi - lo, q, acc);
        return;
    }
    std::size_t k = lo;
    while (k < hi) {
        std::size_t e = k;
        while (e < hi && words[e][depth] == words[k][depth]) ++e;
        word_walk(words, k, e, depth + 1, block(words[k][depth], chain), q, acc);
        k = e;
    }
}

std::vector<std::vector<Perm4>> AdemEvaluator::exec_words(int i, int ell) const {
    std::vector<std::vector<Perm4>> words;
    for (const auto& w : bar_words(i, ell)) {
        std::vector<Perm4> perms;
        perms.reserve(w.size());
        if (inner_first_) {
            for (const auto& g : w) perms.push_back(letter_perm(g));
        } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it)
                perms.push_back(letter_perm(*it));
        }
        words.push_back(std::move(perms));
    }
    std::sort(words.begin(), words.end());
    return words;
}

const AdemEvaluator::TensorList& AdemEvaluator::tilde_tensor(int i, int ell,
                                                             const Simplex& x) {
    auto& per_simplex = tilde_cache_[{i, ell}];
    auto it = per_simplex.find(x);
    if (it != per_simplex.end()) return it->second;

    auto words = exec_words(i, ell);
    CellSet start = {diag4(x)};
    std::map<Tens4, std::uint8_t> acc;
    word_walk(words, 0, words.size(), 0, start, i + 2, acc);
    TensorList terms;
    for (const auto& [t, parity] : acc)
        if (parity) terms.push_back(t);
    return per_simplex.emplace(x, std::move(terms)).first->second;
}

std::uint8_t AdemEvaluator::word_sum(const std::vector<std::vector<Perm4>>& words,
                                     const Cochain<Z2Ring>& c2, const Simplex& x) {
    if (words.empty()) return 0;
    std::vector<std::vector<Perm4>> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    CellSet start = {diag4(x)};
    std::map<Tens4, std::uint8_t> acc;
    word_walk(sorted, 0, sorted.size(), 0, start, -1, acc);
    std::uint8_t v = 0;
    for (const auto& [t, parity] : acc) {
        if (!parity) continue;
        if (t.f[0].dim() != c2.degree() || t.f[1].dim() != c2.degree() ||
            t.f[2].dim() != c2.degree() || t.f[3].dim() != c2.degree())
            continue;
        v ^= c2(t.f[0]) & c2(t.f[1]) & c2(t.f[2]) & c2(t.f[3]);
    }
    return v;
}

namespace {

std::uint8_t tensor_product_value(const std::vector<Tens4>& terms,
                                  const Cochain<Z2Ring>& c2) {
    std::uint8_t acc = 0;
    for (const auto& t : terms)
        acc ^= c2(t.f[0]) & c2(t.f[1]) & c2(t.f[2]) & c2(t.f[3]);
    return acc;
}

}  // namespace

std::uint8_t AdemEvaluator::tilde_E(int i, int ell, const Cochain<ZRing>& c,
                                    const Simplex& x) {
    if (c.degree() != i + 2)
        throw std::invalid_argument("tilde_E expects a cocycle of degree i+2");
    if (!coboundary(c).is_zero())
        throw std::invalid_argument("tilde_E expects an integral cocycle");
    if (x.dim() != i + 5)
        throw std::invalid_argument("tilde_E expects a simplex of dimension i+5");
    return tensor_product_value(tilde_tensor(i, ell, x), reduce_mod2(c));
}

Cochain<Z2Ring> AdemEvaluator::adem_E_cochain(int i, const Cochain<ZRing>& c) {
    if (c.degree() != i + 2)
        throw std::invalid_argument("adem_E expects a cocycle of degree i+2");
    if (!coboundary(c).is_zero())
        throw std::invalid_argument("adem_E expects an integral cocycle");
    const int out_deg = i + 5;
    Cochain<Z2Ring> out(*K_, out_deg);

    const Cochain<Z2Ring> c2 = reduce_mod2(c);
    for (int ell : e_cases(i))
        for (std::size_t k = 0; k < K_->n_simplices(out_deg); ++k)
            out.at(k) ^= tensor_product_value(
                tilde_tensor(i, ell, K_->simplex(out_deg, k)), c2);
    for (const auto& ks : e_cup_terms(i))
        out += cup_.iterated_cup(c2, ks);
    return out;
}

std::uint8_t AdemEvaluator::adem_E(int i, const Cochain<ZRing>& c, const Simplex& x) {
    if (x.dim() != i + 5)
        throw std::invalid_argument("adem_E expects a simplex of dimension i+5");
    if (c.degree() != i + 2)
        throw std::invalid_argument("adem_E expects a cocycle of degree i+2");
    if (!coboundary(c).is_zero())
        throw std::invalid_argument("adem_E expects an integral cocycle");
    const Cochain<Z2Ring> c2 = reduce_mod2(c);
    std::uint8_t v = 0;
    for (int ell : e_cases(i))
        v ^= tensor_product_value(tilde_tensor(i, ell, x), c2);
    for (const auto& ks : e_cup_terms(i))
        v ^= cup_.iterated_cup(c2, ks)(x);
    return v;
}

namespace {

template <class R>
std::uint8_t e3_normalized_impl(const Cochain<R>& c, const Simplex& x) {
    if (c.degree() != 2)
        throw std::invalid_argument("e3_normalized expects a 2-cochain");
    if (x.dim() != 5)
        throw std::invalid_argument("e3_normalized expects a 5-simplex");
    // Face words per tensor factor, one row per summand: the unique
    // face-operator form of E_3 that agrees with the composition formula
    // (frozen from a one-off symbolic evaluation on the standard 5-simplex;
    // universal by naturality).
    static const int words[5][4][3] = {
        {{1, 4, 5}, {0, 1, 2}, {3, 4, 5}, {0, 1, 4}},
        {{1, 4, 5}, {0, 1, 2}, {3, 4, 5}, {3, 4, 5}},
        {{2, 4, 5}, {0, 1, 2}, {0, 4, 5}, {0, 4, 5}},
        {{3, 4, 5}, {0, 1, 3}, {0, 1, 5}, {0, 1, 5}},
        {{3, 4, 5}, {0, 1, 4}, {0, 1, 2}, {0, 1, 2}},
    };
    std::uint8_t acc = 0;
    for (const auto& summand : words) {
        std::uint8_t term = 1;
        for (int fct = 0; fct < 4 && term; ++fct) {
            Simplex y = x;
            for (int k = 2; k >= 0; --k) y = y.face(summand[fct][k]);
            if (y.is_degenerate()) {
                term = 0;
                break;
            }
            if constexpr (R::mod2)
                term &= c(y);
            else
                term &= static_cast<std::uint8_t>(c(y) & 1);
        }
        acc ^= term;
    }
    return acc;
}

}  // namespace

std::uint8_t AdemEvaluator::e3_normalized(const Cochain<Z2Ring>& c, const Simplex& x) {
    return e3_normalized_impl(c, x);
}
std::uint8_t AdemEvaluator::e3_normalized(const Cochain<ZRing>& c, const Simplex& x) {
    return e3_normalized_impl(c, x);
}

ResidualReport AdemEvaluator::adem_relation_residual(const Cochain<ZRing>& c, int i) {
    const int q = i + 2;
    if (c.degree() != q)
        throw std::invalid_argument("residual expects a cocycle of degree i+2");
    ResidualReport rep;
    rep.simplices = K_->n_simplices(q + 4);
    if (rep.simplices == 0) return rep;

    const Cochain<Z2Ring> c2 = reduce_mod2(c);
    const Cochain<Z2Ring> u = cup_.cup(c2, c2, i);
    const Cochain<Z2Ring> v = cup_.cup(c2, c2, i + 1);
    Cochain<Z2Ring> lhs = cup_.cup(u, u, i + 2);
    lhs += cup_.cup(v, v, i);
    const Cochain<Z2Ring> rhs = coboundary(adem_E_cochain(i, c));
    for (std::size_t k = 0; k < rep.simplices; ++k)
        if (lhs.at(k) != rhs.at(k)) ++rep.disagreements;
    return rep;
}

}  // namespace adem
