#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace adem {

using Vertex = std::uint8_t;

// A simplex in the monotone-map model: a non-decreasing tuple of vertex ids.
// Degenerate iff two adjacent entries coincide.  Face operators delete a
// position, degeneracy operators duplicate one; the simplicial identities
// are then automatic.
class Simplex {
public:
    using Storage = boost::container::small_vector<Vertex, 12>;

    Simplex() = default;
    explicit Simplex(Storage v) : v_(std::move(v)) {}
    Simplex(std::initializer_list<int> xs) {
        v_.reserve(xs.size());
        for (int x : xs) v_.push_back(static_cast<Vertex>(x));
    }

    int dim() const { return static_cast<int>(v_.size()) - 1; }
    bool empty() const { return v_.empty(); }
    std::size_t size() const { return v_.size(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const Storage& vertices() const { return v_; }

    bool is_monotone() const {
        for (std::size_t i = 1; i < v_.size(); ++i)
            if (v_[i - 1] > v_[i]) return false;
        return true;
    }

    // Bitmask of positions p with v[p] == v[p+1].
    std::uint32_t rep_mask() const {
        std::uint32_t m = 0;
        for (std::size_t i = 1; i < v_.size(); ++i)
            if (v_[i - 1] == v_[i]) m |= (1u << (i - 1));
        return m;
    }

    bool is_degenerate() const { return rep_mask() != 0; }

    Simplex face(int i) const {
        if (i < 0 || i > dim() || dim() < 1)
            throw std::out_of_range("face index out of range");
        Storage w(v_);
        w.erase(w.begin() + i);
        return Simplex(std::move(w));
    }

    Simplex degeneracy(int i) const {
        if (i < 0 || i > dim())
            throw std::out_of_range("degeneracy index out of range");
        Storage w(v_);
        w.insert(w.begin() + i, v_[i]);
        return Simplex(std::move(w));
    }

    // Removes positions lo..hi in one pass.
    Simplex remove_range(int lo, int hi) const {
        Storage w;
        w.reserve(v_.size() - (hi - lo + 1));
        for (int k = 0; k < static_cast<int>(v_.size()); ++k)
            if (k < lo || k > hi) w.push_back(v_[k]);
        return Simplex(std::move(w));
    }

    // Applies s_{b_k} ... s_{b_1} for strictly increasing indices b (each
    // duplicating a position of the running tuple) in one pass.
    template <class It>
    Simplex multi_degeneracy(It b_begin, It b_end) const {
        const int k = static_cast<int>(b_end - b_begin);
        Storage w;
        w.reserve(v_.size() + k);
        int cnt = 0;
        const int out_len = static_cast<int>(v_.size()) + k;
        for (int m = 0; m < out_len; ++m) {
            while (cnt < k && *(b_begin + cnt) < m) ++cnt;
            w.push_back(v_[m - cnt]);
        }
        return Simplex(std::move(w));
    }

    // Strictly increasing support (duplicates removed).
    Simplex support() const {
        Storage w;
        for (Vertex x : v_)
            if (w.empty() || w.back() != x) w.push_back(x);
        return Simplex(std::move(w));
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(int(v_[i]));
        }
        return s + ")";
    }

    friend bool operator==(const Simplex& x, const Simplex& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const Simplex& x, const Simplex& y) {
        if (x.v_.size() != y.v_.size())
            return x.v_.size() <=> y.v_.size();
        return std::lexicographical_compare_three_way(x.v_.begin(), x.v_.end(),
                                                      y.v_.begin(), y.v_.end());
    }

private:
    Storage v_;
};

inline std::size_t hash_combine(std::size_t h, std::size_t k) {
    return h ^ (k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = s.size();
        for (std::size_t i = 0; i < s.size(); ++i) h = hash_combine(h, s[i]);
        return h;
    }
};

// Cartesian-product cell: a pair of equal-dimension cells with componentwise
// face/degeneracy operators.  Nesting Prod twice models K^{x4} bracketed as
// (K^{x2})^{x2}.
template <class C>
struct Prod {
    C a, b;

    Prod() = default;
    Prod(C x, C y) : a(std::move(x)), b(std::move(y)) {
        if (a.dim() != b.dim())
            throw std::invalid_argument("product factors must have equal dimension");
    }

    int dim() const { return a.dim(); }
    std::uint32_t rep_mask() const { return a.rep_mask() & b.rep_mask(); }
    bool is_degenerate() const { return rep_mask() != 0; }

    Prod face(int i) const {
        Prod p;
        p.a = a.face(i);
        p.b = b.face(i);
        return p;
    }
    Prod degeneracy(int i) const {
        Prod p;
        p.a = a.degeneracy(i);
        p.b = b.degeneracy(i);
        return p;
    }
    Prod remove_range(int lo, int hi) const {
        Prod p;
        p.a = a.remove_range(lo, hi);
        p.b = b.remove_range(lo, hi);
        return p;
    }
    template <class It>
    Prod multi_degeneracy(It b_begin, It b_end) const {
        Prod p;
        p.a = a.multi_degeneracy(b_begin, b_end);
        p.b = b.multi_degeneracy(b_begin, b_end);
        return p;
    }

    std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }

    friend bool operator==(const Prod&, const Prod&) = default;
    friend std::strong_ordering operator<=>(const Prod& x, const Prod& y) {
        if (auto c = x.a <=> y.a; c != 0) return c;
        return x.b <=> y.b;
    }
};

using P2 = Prod<Simplex>;        // cell of K x K
using P4 = Prod<P2>;             // cell of K^{x4} as (K^{x2})^{x2}

inline P4 make_p4(Simplex x1, Simplex x2, Simplex x3, Simplex x4) {
    return P4(P2(std::move(x1), std::move(x2)), P2(std::move(x3), std::move(x4)));
}

struct P2Hash {
    std::size_t operator()(const P2& p) const {
        SimplexHash h;
        return hash_combine(h(p.a), h(p.b));
    }
};
struct P4Hash {
    std::size_t operator()(const P4& p) const {
        P2Hash h;
        return hash_combine(h(p.a), h(p.b));
    }
};

// A finite simplicial set generated by an ordered abstract simplicial
// complex: the non-degenerate q-simplices are the strictly increasing
// (q+1)-tuples whose vertex set lies in some maximal simplex.
class SimplicialSet {
public:
    SimplicialSet() = default;
    SimplicialSet(std::string name, std::vector<std::vector<int>> maximal);

    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& maximal_simplices() const { return maximal_; }

    // Largest dimension carrying a non-degenerate simplex.
    int dim() const { return static_cast<int>(basis_.size()) - 1; }

    std::size_t n_simplices(int d) const {
        return (d < 0 || d > dim()) ? 0 : basis_[d].size();
    }
    const std::vector<Simplex>& simplices(int d) const {
        static const std::vector<Simplex> none;
        return (d < 0 || d > dim()) ? none : basis_[d];
    }
    const Simplex& simplex(int d, std::size_t idx) const { return basis_[d][idx]; }

    // Index of a non-degenerate simplex in the canonical (lexicographic)
    // basis of its dimension; throws if absent.
    std::size_t index_of(const Simplex& s) const;

    // Whether the support of s spans a simplex of the complex.
    bool contains(const Simplex& s) const;

    std::size_t total_simplices() const {
        std::size_t n = 0;
        for (const auto& b : basis_) n += b.size();
        return n;
    }

private:
    std::string name_;
    std::vector<std::vector<int>> maximal_;
    std::vector<std::vector<Simplex>> basis_;  // basis_[d]: sorted non-degenerate d-simplices
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

// Builds the face closure of a list of strictly increasing vertex tuples.
SimplicialSet build_complex(const std::string& name,
                            const std::vector<std::vector<int>>& maximal);

// The full n-simplex Delta^n on vertices 0..n.
SimplicialSet delta(int n);

// Boundary of Delta^n.
SimplicialSet boundary_delta(int n);

}  // namespace adem
