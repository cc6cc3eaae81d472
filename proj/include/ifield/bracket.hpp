#pragma once

#include "ifield/observable.hpp"

namespace ifield {

// canonical Poisson bracket {F,G} = sum_j dF/dq_j dG/dp_j - dF/dp_j dG/dq_j
Observable poisson_bracket(const Observable& F, const Observable& G);

// bracket of covariant observables; the commutators {P_i,P_j} bring in the
// magnetic 2-form: {P1,P2} = -B3, {P2,P3} = -B1, {P3,P1} = -B2
Observable covariant_bracket(const Observable& F, const Observable& G, const TwoForm& B);

struct DetEq {
    std::string label;  // "p1^2", ..., "1"
    MomIdx mon;
    NormalForm residual;
};

struct DetEqSet {
    std::string provenance;  // "{X1,H}", "{X2,H}", "{X1,X2}"
    std::vector<DetEq> eqs;  // fixed order: p1^2 p1p2 p1p3 p2^2 p2p3 p3^2 p1 p2 p3 1

    bool all_zero() const;
    std::string to_text() const;
};

extern const std::array<MomIdx, 10> kDetEqOrder;
extern const std::array<const char*, 10> kDetEqLabels;

// collect the 10 momentum-monomial coefficients of the bracket {F,G};
// throws if a degree-3 residual survives (invalid leading-order pair)
DetEqSet determining_equations(const Observable& F, const Observable& G,
                               const TwoForm& B, const std::string& provenance);

}  // namespace ifield
