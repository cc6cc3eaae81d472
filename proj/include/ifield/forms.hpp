#pragma once

#include <array>

#include "ifield/parser.hpp"

namespace ifield {

// Components of a 1-form A = A1 dq1 + A2 dq2 + A3 dq3 in the chart's
// coordinate basis. Momentum symbols are not allowed in components.
struct OneForm {
    Chart chart = Chart::Cartesian;
    std::array<Expr, 3> comp;
};

// Components of a 2-form B = B1 dq2^dq3 + B2 dq3^dq1 + B3 dq1^dq2.
struct TwoForm {
    Chart chart = Chart::Cartesian;
    std::array<Expr, 3> comp;
};

OneForm make_one_form(Chart chart, const std::string& a1, const std::string& a2,
                      const std::string& a3);
TwoForm make_two_form(Chart chart, const std::string& b1, const std::string& b2,
                      const std::string& b3);

// B = dA, componentwise B1 = d2 A3 - d3 A2, B2 = d3 A1 - d1 A3,
// B3 = d1 A2 - d2 A1
TwoForm exterior_derivative(const OneForm& A);

// coefficient of dB: d1 B1 + d2 B2 + d3 B3 (closedness check; the same
// formula applies to coordinate components in either chart)
Expr divergence(const TwoForm& B);

// ray (Poincare) gauge A_i(q) = sum_j q_j int_0^1 t B_ji(t q) dt for closed
// Cartesian B whose components are polynomials times at most one linear
// atom factor; anything else is rejected
OneForm poincare_gauge(const TwoForm& B);

// A' = A + d(chi)
OneForm gauge_shift(const OneForm& A, const Expr& chi);

bool two_forms_equal(const TwoForm& a, const TwoForm& b);
bool one_forms_equal(const OneForm& a, const OneForm& b);

}  // namespace ifield
