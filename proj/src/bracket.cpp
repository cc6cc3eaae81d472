#include "ifield/bracket.hpp"

#include <sstream>

namespace ifield {

namespace {

Observable bracket_core(const Observable& F, const Observable& G) {
    auto q = chart_coords(F.chart);
    Observable r = obs_zero(F.chart, F.pres);
    for (int j = 0; j < 3; ++j) {
        r = r + F.derivative_q(q[size_t(j)]) * G.derivative_p(j) -
            F.derivative_p(j) * G.derivative_q(q[size_t(j)]);
    }
    return r;
}

}  // namespace

Observable poisson_bracket(const Observable& F, const Observable& G) {
    if (F.chart != G.chart) throw ExprError("poisson_bracket: chart mismatch");
    if (F.pres != Momenta::Canonical || G.pres != Momenta::Canonical)
        throw ExprError("poisson_bracket: canonical presentation required");
    return bracket_core(F, G);
}

Observable covariant_bracket(const Observable& F, const Observable& G, const TwoForm& B) {
    if (F.chart != G.chart || B.chart != F.chart)
        throw ExprError("covariant_bracket: chart mismatch");
    if (F.pres != Momenta::Covariant || G.pres != Momenta::Covariant)
        throw ExprError("covariant_bracket: covariant presentation required");
    Observable r = bracket_core(F, G);
    // {P1,P2} = -B3, {P2,P3} = -B1, {P3,P1} = -B2
    const std::array<std::array<int, 3>, 3> pairs = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    for (auto& [i, j, k] : pairs) {
        NormalForm pb = -normal_form(B.comp[size_t(k)]);
        Observable t = F.derivative_p(i) * G.derivative_p(j) -
                       F.derivative_p(j) * G.derivative_p(i);
        r = r + t.scaled(pb);
    }
    return r;
}

const std::array<MomIdx, 10> kDetEqOrder = {
    MomIdx{{2, 0, 0}}, MomIdx{{1, 1, 0}}, MomIdx{{1, 0, 1}}, MomIdx{{0, 2, 0}},
    MomIdx{{0, 1, 1}}, MomIdx{{0, 0, 2}}, MomIdx{{1, 0, 0}}, MomIdx{{0, 1, 0}},
    MomIdx{{0, 0, 1}}, MomIdx{{0, 0, 0}}};

const std::array<const char*, 10> kDetEqLabels = {
    "p1^2", "p1*p2", "p1*p3", "p2^2", "p2*p3", "p3^2", "p1", "p2", "p3", "1"};

bool DetEqSet::all_zero() const {
    for (auto& e : eqs)
        if (!e.residual.is_zero()) return false;
    return true;
}

std::string DetEqSet::to_text() const {
    std::ostringstream os;
    os << "# determining equations from " << provenance << "\n";
    for (auto& e : eqs) {
        os << "[" << e.label << "]  " << print_expr(to_expr(e.residual)) << " = 0\n";
    }
    return os.str();
}

DetEqSet determining_equations(const Observable& F, const Observable& G,
                               const TwoForm& B, const std::string& provenance) {
    Observable br = (F.pres == Momenta::Covariant) ? covariant_bracket(F, G, B)
                                                   : poisson_bracket(F, G);
    br.prune();
    if (br.degree() > 2)
        throw ExprError("determining_equations: degree-3 residual survives "
                        "(invalid leading-order pair)");
    DetEqSet out;
    out.provenance = provenance;
    for (size_t k = 0; k < kDetEqOrder.size(); ++k)
        out.eqs.push_back(DetEq{kDetEqLabels[k], kDetEqOrder[k], br.at(kDetEqOrder[k])});
    return out;
}

}  // namespace ifield
