#include "ifield/oracle.hpp"

namespace ifield {

double numeric_bracket_oracle(const Observable& F, const Observable& G,
                              const std::array<double, 6>& pt, double h) {
    if (F.pres != Momenta::Canonical || G.pres != Momenta::Canonical)
        throw ExprError("numeric_bracket_oracle: canonical presentation required");
    auto diff = [&](const Observable& O, int slot) {
        std::array<double, 6> a = pt, b = pt;
        a[size_t(slot)] += h;
        b[size_t(slot)] -= h;
        return (O.eval(a) - O.eval(b)) / (2 * h);
    };
    double acc = 0;
    for (int j = 0; j < 3; ++j)
        acc += diff(F, j) * diff(G, 3 + j) - diff(F, 3 + j) * diff(G, j);
    return acc;
}

}  // namespace ifield
