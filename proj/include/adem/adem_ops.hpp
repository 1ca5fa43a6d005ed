#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adem/cochain.hpp"
#include "adem/cup.hpp"
#include "adem/ez.hpp"

namespace adem {

// Element ((a,b), eps) of Z_2^{x2} x|_chi Z_2 with chi((a,b),1) = (b,a).
struct GroupElement {
    std::uint8_t a = 0, b = 0, eps = 0;

    bool is_identity() const { return !a && !b && !eps; }
    // bar swap on the normal part
    GroupElement bar() const { return {b, a, eps}; }

    friend GroupElement operator*(const GroupElement& x, const GroupElement& y) {
        // (g1,e1)(g2,e2) = (g1 * chi(e1,g2), e1+e2)
        const std::uint8_t ca = x.eps ? y.b : y.a;
        const std::uint8_t cb = x.eps ? y.a : y.b;
        return {static_cast<std::uint8_t>(x.a ^ ca), static_cast<std::uint8_t>(x.b ^ cb),
                static_cast<std::uint8_t>(x.eps ^ y.eps)};
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline constexpr GroupElement kA1{0, 0, 1};
inline constexpr GroupElement kA2{1, 0, 0};
inline constexpr GroupElement kA3{0, 1, 0};

// Action of a letter on C(K^{x4}): a1 -> z, a2 -> t^{x2}, a3 -> t.
Perm4 letter_perm(const GroupElement& g);

// A summand of e_{(3i+3,l)}: a word of 3i+3 letters with exactly one a1.
using BarWord = std::vector<GroupElement>;

// All words of e_{(3i+3,l)}: for every (3i+2-l, l)-shuffle of the letter
// multiset [(1,0) x (3i+2-l), (0,1) x l] and every split 0 <= j <= 3i+2,
// the letters after the split are bar-swapped and a1 sits at the split.
std::vector<BarWord> bar_words(int i, int ell);

// The l values entering e_{3i+3} (the parity case table).
std::vector<int> e_cases(int i);

// Cup-term index triples of the E_{3i+3} case formula, completed to
// left-associated four-factor products.
std::vector<std::array<int, 3>> e_cup_terms(int i);

struct ResidualReport {
    std::size_t disagreements = 0;
    std::size_t simplices = 0;  // zero means the check was vacuous
};

// Evaluates the Adem cocyclic operations mod 2.  Sh_4 and Aw_4 are cached
// per cell, word sums share common prefixes, and the four-factor tensor of
// each tilde-E summand family is cached per simplex so that changing the
// cocycle costs almost nothing.
class AdemEvaluator {
public:
    explicit AdemEvaluator(const SimplicialSet& K, bool first_letter_innermost = true,
                           bool drop_early = true)
        : K_(&K), cup_(K), inner_first_(first_letter_innermost), drop_(drop_early) {}

    const SimplicialSet& complex() const { return *K_; }
    CupCalculator<Z2Ring>& cup() { return cup_; }

    // tilde-E_{(3i+3,l)}(c^4)(x) for an integral cocycle c of degree i+2 and
    // an (i+5)-simplex x.
    std::uint8_t tilde_E(int i, int ell, const Cochain<ZRing>& c, const Simplex& x);

    // E_{3i+3}(c^4) as a mod-2 cochain of degree i+5, and its value on one
    // simplex.
    Cochain<Z2Ring> adem_E_cochain(int i, const Cochain<ZRing>& c);
    std::uint8_t adem_E(int i, const Cochain<ZRing>& c, const Simplex& x);

    // The five-summand normalized formula for E_3 (2-cochain c, 5-simplex x).
    static std::uint8_t e3_normalized(const Cochain<Z2Ring>& c, const Simplex& x);
    static std::uint8_t e3_normalized(const Cochain<ZRing>& c, const Simplex& x);

    // Counts the (q+4)-simplices where the two sides of the Adem relation
    //   (c u_i c) u_{i+2} (c u_i c) + (c u_{i+1} c) u_i (c u_{i+1} c)
    //   = delta E_{3i+3}(c^4)
    // disagree mod 2.
    ResidualReport adem_relation_residual(const Cochain<ZRing>& c, int i);

    using Z2Chain = Chain<P4, Z2Ring>;

    // mu c^{(x)4} Aw_4 (blocks) Delta(x) for operator words given as
    // permutation sequences in execution order (first entry applied first,
    // each entry meaning: Sh_4 then the permutation).  Words enter with
    // multiplicity; the value is the mod-2 sum.
    std::uint8_t word_sum(const std::vector<std::vector<Perm4>>& words,
                          const Cochain<Z2Ring>& c2, const Simplex& x);

    using TensorList = std::vector<Tens4>;

    // XOR-reduced four-factor tensors of sum_w Aw_4 (blocks of w) Delta(x),
    // filtered to factors of equal dimension i+2; cached per (i, ell, x).
    const TensorList& tilde_tensor(int i, int ell, const Simplex& x);

private:
    // mod-2 chains during word evaluation: cell sets with XOR insertion
    using CellSet = std::unordered_set<P4, P4Hash>;

    const Z2Chain& sh4_cell(const P4& cell);
    const TensorList& aw4_cell(const P4& cell);
    CellSet block(Perm4 p, const CellSet& ch);  // perm after Sh_4
    std::vector<std::vector<Perm4>> exec_words(int i, int ell) const;
    void leaf_collect(const CellSet& chain, std::size_t mult, int q,
                      std::map<Tens4, std::uint8_t>& acc);
    void word_walk(std::vector<std::vector<Perm4>>& words, std::size_t lo,
                   std::size_t hi, std::size_t depth, const CellSet& chain, int q,
                   std::map<Tens4, std::uint8_t>& acc);

    const SimplicialSet* K_;
    CupCalculator<Z2Ring> cup_;
    bool inner_first_;
    bool drop_;
    std::unordered_map<P4, Z2Chain, P4Hash> sh4_cache_;
    std::unordered_map<P4, TensorList, P4Hash> aw4_cache_;
    std::map<std::pair<int, int>,
             std::unordered_map<Simplex, TensorList, SimplexHash>>
        tilde_cache_;
};

}  // namespace adem
