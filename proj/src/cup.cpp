#include "adem/cup.hpp"

namespace adem {

Cochain<Z2Ring> eq1_residual(CupCalculator<Z2Ring>& calc, const Cochain<Z2Ring>& c,
                             const Cochain<Z2Ring>& cp, int i) {
    if (i < 1) throw std::invalid_argument("eq1_residual needs i >= 1");
    Cochain<Z2Ring> out = coboundary(calc.cup(c, cp, i));
    out += calc.cup(c, cp, i - 1);
    out += calc.cup(cp, c, i - 1);
    out += calc.cup(coboundary(c), cp, i);
    out += calc.cup(c, coboundary(cp), i);
    return out;
}

}  // namespace adem
