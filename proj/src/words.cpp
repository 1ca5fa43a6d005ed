#include "adem/words.hpp"

namespace adem {

int OperatorWord::degree() const {
    int d = 0;
    for (const auto& s : syms_)
        d += (s.kind == OpSymbol::Kind::degeneracy) ? 1 : -1;
    return d;
}

int OperatorWord::min_input_dim() const {
    // Walk right-to-left tracking the lowest admissible running dimension.
    // A symbol with index i needs current dim >= i, and a face also needs
    // current dim >= 1 so the result is still a simplex.
    int need = 0;   // minimal input dimension found so far
    int shift = 0;  // dimension change accumulated from the right end
    for (auto it = syms_.rbegin(); it != syms_.rend(); ++it) {
        const int lo = (it->kind == OpSymbol::Kind::face) ? std::max(it->index, 1)
                                                          : it->index;
        need = std::max(need, lo - shift);
        shift += (it->kind == OpSymbol::Kind::degeneracy) ? 1 : -1;
    }
    return need;
}

bool OperatorWord::is_normal_form() const {
    std::size_t i = 0;
    while (i < syms_.size() && syms_[i].kind == OpSymbol::Kind::degeneracy) ++i;
    for (std::size_t k = i; k < syms_.size(); ++k)
        if (syms_[k].kind != OpSymbol::Kind::face) return false;
    // degeneracy indices strictly decrease left-to-right
    for (std::size_t k = 1; k < i; ++k)
        if (!(syms_[k - 1].index > syms_[k].index)) return false;
    // face indices strictly increase left-to-right
    for (std::size_t k = i + 1; k < syms_.size(); ++k)
        if (!(syms_[k - 1].index < syms_[k].index)) return false;
    return true;
}

OperatorWord OperatorWord::normalized() const {
    std::vector<OpSymbol> w = syms_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            OpSymbol& L = w[k];
            OpSymbol& R = w[k + 1];
            const bool lf = L.kind == OpSymbol::Kind::face;
            const bool rf = R.kind == OpSymbol::Kind::face;
            if (lf && !rf) {
                // d_i s_j
                const int i = L.index, j = R.index;
                if (i == j || i == j + 1) {
                    w.erase(w.begin() + k, w.begin() + k + 2);
                } else if (i < j) {
                    L = OpSymbol::dg(j - 1);
                    R = OpSymbol::fc(i);
                } else {  // i > j + 1
                    L = OpSymbol::dg(j);
                    R = OpSymbol::fc(i - 1);
                }
                changed = true;
                break;
            }
            if (lf && rf && L.index >= R.index) {
                // d_a d_b with a >= b rewrites to d_b d_{a+1}
                const int a = L.index, b = R.index;
                L = OpSymbol::fc(b);
                R = OpSymbol::fc(a + 1);
                changed = true;
                break;
            }
            if (!lf && !rf && L.index <= R.index) {
                // s_a s_b with a <= b rewrites to s_{b+1} s_a
                const int a = L.index, b = R.index;
                L = OpSymbol::dg(b + 1);
                R = OpSymbol::dg(a);
                changed = true;
                break;
            }
        }
    }
    return OperatorWord(std::move(w));
}

Simplex OperatorWord::apply(const Simplex& s) const {
    Simplex cur = s;
    for (auto it = syms_.rbegin(); it != syms_.rend(); ++it) {
        cur = (it->kind == OpSymbol::Kind::face) ? cur.face(it->index)
                                                 : cur.degeneracy(it->index);
    }
    return cur;
}

std::string OperatorWord::str() const {
    if (syms_.empty()) return "id";
    std::string out;
    for (const auto& s : syms_) {
        out += (s.kind == OpSymbol::Kind::face) ? "d" : "s";
        out += std::to_string(s.index) + " ";
    }
    out.pop_back();
    return out;
}

OperatorWord normalize_word(const OperatorWord& w) { return w.normalized(); }

}  // namespace adem
