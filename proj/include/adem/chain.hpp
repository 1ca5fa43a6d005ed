#pragma once

#include <array>
#include <map>
#include <utility>

#include "adem/rings.hpp"
#include "adem/simplex.hpp"

namespace adem {

// Basis element of C(A) (x) C(B); the factors carry independent dimensions.
template <class A, class B>
struct Tens2 {
    A a;
    B b;

    int dim() const { return a.dim() + b.dim(); }
    bool is_degenerate() const { return a.is_degenerate() || b.is_degenerate(); }
    std::string str() const { return a.str() + " (x) " + b.str(); }

    friend bool operator==(const Tens2&, const Tens2&) = default;
    friend std::strong_ordering operator<=>(const Tens2& x, const Tens2& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

// Basis element of C(K)^{(x)4}.
struct Tens4 {
    std::array<Simplex, 4> f;

    int dim() const { return f[0].dim() + f[1].dim() + f[2].dim() + f[3].dim(); }
    bool is_degenerate() const {
        return f[0].is_degenerate() || f[1].is_degenerate() || f[2].is_degenerate() ||
               f[3].is_degenerate();
    }
    std::string str() const {
        return f[0].str() + " (x) " + f[1].str() + " (x) " + f[2].str() + " (x) " + f[3].str();
    }

    friend bool operator==(const Tens4&, const Tens4&) = default;
    friend std::strong_ordering operator<=>(const Tens4& x, const Tens4& y) {
        for (int i = 0; i < 4; ++i)
            if (auto c = x.f[i] <=> y.f[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
};

struct Tens4Hash {
    std::size_t operator()(const Tens4& t) const {
        SimplexHash h;
        std::size_t v = 0;
        for (const auto& s : t.f) v = hash_combine(v, h(s));
        return v;
    }
};

// Sparse linear combination of basis cells with exact coefficients.
// Degenerate cells are dropped on insertion unless dropping is disabled
// (the normalized complex kills them; keeping them is only useful for
// the nullity spot-checks).
template <class B, class R>
class Chain {
public:
    using elem = typename R::elem;
    using Terms = std::map<B, elem>;

    Chain() = default;
    explicit Chain(bool drop_degenerate) : drop_(drop_degenerate) {}

    bool drops_degenerate() const { return drop_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    void add(const B& cell, elem coeff) {
        if (R::is_zero(coeff)) return;
        if (drop_ && cell.is_degenerate()) return;
        auto [it, inserted] = t_.emplace(cell, coeff);
        if (!inserted) {
            it->second = R::add(it->second, coeff);
            if (R::is_zero(it->second)) t_.erase(it);
        }
    }

    void add(const Chain& other, const elem& scale = R::one()) {
        for (const auto& [cell, c] : other.t_) add(cell, R::mul(c, scale));
    }

    elem coeff(const B& cell) const {
        auto it = t_.find(cell);
        return it == t_.end() ? R::zero() : it->second;
    }

    Chain& operator+=(const Chain& other) {
        add(other);
        return *this;
    }

    friend bool operator==(const Chain& x, const Chain& y) { return x.t_ == y.t_; }

private:
    Terms t_;
    bool drop_ = true;
};

// Alternating sum of faces, in the normalized complex.
template <class C, class R>
Chain<C, R> boundary_cell(const C& cell) {
    Chain<C, R> out;
    if (cell.dim() < 1) return out;
    for (int i = 0; i <= cell.dim(); ++i)
        out.add(cell.face(i), R::from_sign(i));
    return out;
}

template <class C, class R>
Chain<C, R> boundary(const Chain<C, R>& ch) {
    Chain<C, R> out(ch.drops_degenerate());
    for (const auto& [cell, c] : ch.terms()) {
        if (cell.dim() < 1) continue;
        for (int i = 0; i <= cell.dim(); ++i)
            out.add(cell.face(i), R::mul(c, R::from_sign(i)));
    }
    return out;
}

// d on a two-factor tensor chain: d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db.
template <class A, class B, class R>
Chain<Tens2<A, B>, R> tensor_boundary(const Chain<Tens2<A, B>, R>& ch) {
    Chain<Tens2<A, B>, R> out(ch.drops_degenerate());
    for (const auto& [t, c] : ch.terms()) {
        if (t.a.dim() >= 1)
            for (int i = 0; i <= t.a.dim(); ++i)
                out.add(Tens2<A, B>{t.a.face(i), t.b}, R::mul(c, R::from_sign(i)));
        if (t.b.dim() >= 1)
            for (int i = 0; i <= t.b.dim(); ++i)
                out.add(Tens2<A, B>{t.a, t.b.face(i)},
                        R::mul(c, R::from_sign(i + t.a.dim())));
    }
    return out;
}

// Transposition T(a (x) b) = (-1)^{|a||b|} b (x) a.
template <class A, class B, class R>
Chain<Tens2<B, A>, R> tensor_transpose(const Chain<Tens2<A, B>, R>& ch) {
    Chain<Tens2<B, A>, R> out(ch.drops_degenerate());
    for (const auto& [t, c] : ch.terms())
        out.add(Tens2<B, A>{t.b, t.a}, R::mul(c, R::from_sign(t.a.dim() * t.b.dim())));
    return out;
}

}  // namespace adem
