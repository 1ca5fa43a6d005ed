#pragma once

#include <string>
#include <vector>

#include "adem/simplex.hpp"

namespace adem {

// One face or degeneracy symbol.
struct OpSymbol {
    enum class Kind { face, degeneracy };
    Kind kind;
    int index;

    static OpSymbol fc(int i) { return {Kind::face, i}; }
    static OpSymbol dg(int i) { return {Kind::degeneracy, i}; }

    friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// A composition of face and degeneracy operators.  Symbols are stored in
// reading order and compose right-to-left: the last symbol acts first.
//
// The normal form (degeneracies left of faces, s_{j_t}...s_{j_1} d_{i_1}...d_{i_s}
// with j_t > ... > j_1 and i_1 < ... < i_s) is reached by rewriting with the
// five simplicial identities plus the annihilation d_j s_j = d_{j+1} s_j = id.
class OperatorWord {
public:
    OperatorWord() = default;
    explicit OperatorWord(std::vector<OpSymbol> syms) : syms_(std::move(syms)) {}

    const std::vector<OpSymbol>& symbols() const { return syms_; }
    bool is_identity() const { return syms_.empty(); }
    std::size_t length() const { return syms_.size(); }

    // Net dimension shift of the composite (degeneracies +1, faces -1).
    int degree() const;

    // Smallest input dimension on which every symbol is applicable.
    int min_input_dim() const;

    bool is_normal_form() const;
    OperatorWord normalized() const;

    // Applies the composite to a simplex (rightmost symbol first).
    Simplex apply(const Simplex& s) const;

    std::string str() const;

    friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

private:
    std::vector<OpSymbol> syms_;
};

OperatorWord normalize_word(const OperatorWord& w);

}  // namespace adem
