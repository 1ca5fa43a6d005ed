#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "adem/chain.hpp"
#include "adem/rings.hpp"
#include "adem/simplex.hpp"

namespace adem {

// A cochain of fixed degree, stored densely over the canonical basis of
// non-degenerate simplices.  Degenerate simplices evaluate to zero
// (normalized cochain complex).
template <class R>
class Cochain {
public:
    using elem = typename R::elem;

    Cochain() = default;
    Cochain(const SimplicialSet& K, int degree)
        : K_(&K), deg_(degree), v_(K.n_simplices(degree), R::zero()) {}

    const SimplicialSet& complex() const { return *K_; }
    int degree() const { return deg_; }
    std::size_t size() const { return v_.size(); }
    bool is_zero() const {
        for (const auto& x : v_)
            if (!R::is_zero(x)) return false;
        return true;
    }

    const elem& at(std::size_t i) const { return v_[i]; }
    elem& at(std::size_t i) { return v_[i]; }
    const std::vector<elem>& values() const { return v_; }

    // Value on a simplex of matching degree; zero on degenerate ones.
    elem operator()(const Simplex& s) const {
        if (s.dim() != deg_)
            throw std::logic_error("cochain evaluated on simplex of wrong dimension");
        if (s.is_degenerate()) return R::zero();
        return v_[K_->index_of(s)];
    }

    Cochain& operator+=(const Cochain& o) {
        require_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] = R::add(v_[i], o.v_[i]);
        return *this;
    }

    friend Cochain operator+(Cochain x, const Cochain& y) {
        x += y;
        return x;
    }

    friend bool operator==(const Cochain& x, const Cochain& y) {
        return x.deg_ == y.deg_ && x.v_ == y.v_;
    }

private:
    void require_same(const Cochain& o) const {
        if (K_ != o.K_ || deg_ != o.deg_)
            throw std::invalid_argument("cochain complex/degree mismatch");
    }

    const SimplicialSet* K_ = nullptr;
    int deg_ = 0;
    std::vector<elem> v_;
};

template <class R>
Cochain<R> indicator_cochain(const SimplicialSet& K, const Simplex& s) {
    Cochain<R> c(K, s.dim());
    c.at(K.index_of(s)) = R::one();
    return c;
}

template <class R>
Cochain<R> constant_cochain(const SimplicialSet& K, int degree, typename R::elem value) {
    Cochain<R> c(K, degree);
    for (std::size_t i = 0; i < c.size(); ++i) c.at(i) = value;
    return c;
}

// delta^n c = (-1)^{n+1} c d_{n+1}.
template <class R>
Cochain<R> coboundary(const Cochain<R>& c) {
    const SimplicialSet& K = c.complex();
    const int n = c.degree();
    Cochain<R> out(K, n + 1);
    if (n < 0) return out;
    const int outer = n + 1;  // sign (-1)^{n+1}
    for (std::size_t yi = 0; yi < K.n_simplices(n + 1); ++yi) {
        const Simplex& y = K.simplex(n + 1, yi);
        typename R::elem acc = R::zero();
        for (int i = 0; i <= y.dim(); ++i)
            acc = R::add(acc, R::mul(R::from_sign(outer + i), c(y.face(i))));
        out.at(yi) = acc;
    }
    return out;
}

// Bilinear pairing of a cochain with a chain of the same degree.
template <class R>
typename R::elem eval(const Cochain<R>& c, const Chain<Simplex, R>& ch) {
    typename R::elem acc = R::zero();
    for (const auto& [s, coeff] : ch.terms()) {
        if (s.dim() != c.degree())
            throw std::invalid_argument("eval degree mismatch");
        acc = R::add(acc, R::mul(coeff, c(s)));
    }
    return acc;
}

// mu c1 (x) c2 on a two-factor tensor chain; summands with a factor of the
// wrong dimension contribute zero.
template <class R>
typename R::elem tensor_eval(const Cochain<R>& c1, const Cochain<R>& c2,
                             const Chain<Tens2<Simplex, Simplex>, R>& ch) {
    typename R::elem acc = R::zero();
    for (const auto& [t, coeff] : ch.terms()) {
        if (t.a.dim() != c1.degree() || t.b.dim() != c2.degree()) continue;
        acc = R::add(acc, R::mul(coeff, R::mul(c1(t.a), c2(t.b))));
    }
    return acc;
}

// mu c1 (x) c2 (x) c3 (x) c4 on a four-factor tensor chain.
template <class R>
typename R::elem tensor_eval(const Cochain<R>& c1, const Cochain<R>& c2,
                             const Cochain<R>& c3, const Cochain<R>& c4,
                             const Chain<Tens4, R>& ch) {
    typename R::elem acc = R::zero();
    for (const auto& [t, coeff] : ch.terms()) {
        if (t.f[0].dim() != c1.degree() || t.f[1].dim() != c2.degree() ||
            t.f[2].dim() != c3.degree() || t.f[3].dim() != c4.degree())
            continue;
        acc = R::add(acc, R::mul(coeff, R::mul(R::mul(c1(t.f[0]), c2(t.f[1])),
                                               R::mul(c3(t.f[2]), c4(t.f[3])))));
    }
    return acc;
}

template <class R>
Cochain<Z2Ring> reduce_mod2(const Cochain<R>& c) {
    Cochain<Z2Ring> out(c.complex(), c.degree());
    if constexpr (R::mod2) {
        for (std::size_t i = 0; i < c.size(); ++i) out.at(i) = c.at(i);
    } else {
        for (std::size_t i = 0; i < c.size(); ++i)
            out.at(i) = static_cast<std::uint8_t>(c.at(i) & 1);
    }
    return out;
}

// Deterministic sample from Ker delta^n (kernel basis by exact elimination).
template <class R>
Cochain<R> random_cocycle(const SimplicialSet& K, int degree, std::uint64_t seed);

// Deterministic random cochain with small coefficients.
template <class R>
Cochain<R> random_cochain(const SimplicialSet& K, int degree, std::uint64_t seed);

}  // namespace adem
