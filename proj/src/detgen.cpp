#include "ifield/detgen.hpp"

#include <sstream>

namespace ifield {

const char* leading_class_name(LeadingClass c) {
    switch (c) {
        case LeadingClass::EllipticCylindrical: return "elliptic-cylindrical";
        case LeadingClass::OblateProlateSpheroidal: return "spheroidal";
        case LeadingClass::CircularParabolic: return "circular-parabolic";
        case LeadingClass::NoCoordinate: return "no-coordinate";
    }
    return "?";
}

LeadingClass leading_class_from_name(const std::string& name) {
    for (LeadingClass c :
         {LeadingClass::EllipticCylindrical, LeadingClass::OblateProlateSpheroidal,
          LeadingClass::CircularParabolic, LeadingClass::NoCoordinate}) {
        if (name == leading_class_name(c)) return c;
    }
    throw ExprError("unknown leading-order class: " + name);
}

Chart leading_class_chart(LeadingClass c) {
    return c == LeadingClass::EllipticCylindrical ? Chart::Cartesian
                                                  : Chart::Cylindrical;
}

namespace {

Expr jet3(const std::string& name, Chart chart) {
    return Expr::jet(name, chart, {true, true, true}, {0, 0, 0});
}

Observable with_lower_order(Observable lead, Chart chart, const std::string& stem) {
    const char* suffix[3] = {"1", "2", "3"};
    const char* csuffix[3] = {"r", "phi", "Z"};
    for (int j = 0; j < 3; ++j) {
        std::string nm = stem + "_" +
                         (chart == Chart::Cartesian ? suffix[j] : csuffix[j]);
        lead = lead + obs_momentum(chart, j, Momenta::Covariant)
                          .scaled(normal_form(jet3(nm, chart)));
    }
    lead = lead + obs_scalar(chart, normal_form(jet3("m" + stem.substr(1), chart)),
                             Momenta::Covariant);
    return lead;
}

TwoForm jet_field(Chart chart) {
    TwoForm B;
    B.chart = chart;
    if (chart == Chart::Cartesian) {
        B.comp = {jet3("B1", chart), jet3("B2", chart), jet3("B3", chart)};
    } else {
        B.comp = {jet3("Br", chart), jet3("Bphi", chart), jet3("BZ", chart)};
    }
    return B;
}

}  // namespace

ClassEquations generate_determining_equations(LeadingClass cls) {
    Chart chart = leading_class_chart(cls);
    auto P = [&](int j) { return obs_momentum(Chart::Cartesian, j, Momenta::Covariant); };
    auto L = [&](int j) { return obs_angular(j, Momenta::Covariant); };
    auto par = [&](const char* n) { return normal_form(Expr::symbol(n)); };

    Observable X1l = obs_zero(Chart::Cartesian, Momenta::Covariant);
    Observable X2l = obs_zero(Chart::Cartesian, Momenta::Covariant);
    switch (cls) {
        case LeadingClass::EllipticCylindrical:
            X1l = L(2) * L(2) + (L(2) * P(2)).scaled(par("a")) +
                  (P(0) * P(0)).scaled(par("b")) + (P(0) * P(2)).scaled(par("c")) +
                  (P(1) * P(2)).scaled(par("d"));
            X2l = P(2) * P(2);
            break;
        case LeadingClass::OblateProlateSpheroidal:
            X1l = L(0) * L(0) + L(1) * L(1) + L(2) * L(2) +
                  (L(2) * P(2)).scaled(par("a")) + (P(2) * P(2)).scaled(par("b"));
            X2l = L(2) * L(2);
            break;
        case LeadingClass::CircularParabolic:
            X1l = L(2) * L(2);
            X2l = L(0) * P(1) - L(1) * P(0) + (L(2) * P(2)).scaled(par("a"));
            break;
        case LeadingClass::NoCoordinate:
            X1l = L(2) * L(2) + (P(2) * P(2)).scaled(par("a"));
            X2l = L(2) * P(2) + (P(2) * P(2)).scaled(par("b"));
            break;
    }
    if (chart == Chart::Cylindrical) {
        X1l = to_cylindrical(X1l);
        X2l = to_cylindrical(X2l);
    }
    Observable X1 = with_lower_order(X1l, chart, "s1");
    Observable X2 = with_lower_order(X2l, chart, "s2");
    Observable H = hamiltonian_observable(chart, jet3("W", chart));
    TwoForm B = jet_field(chart);

    ClassEquations out;
    out.cls = cls;
    out.x1h = determining_equations(X1, H, B, "{X1,H}");
    out.x2h = determining_equations(X2, H, B, "{X2,H}");
    out.x1x2 = determining_equations(X1, X2, B, "{X1,X2}");
    return out;
}

namespace {

PrintedDetEq mk(const std::string& anchor, const MomIdx& mon, int orient,
                const std::string& text) {
    return PrintedDetEq{anchor, mon, orient, parse_expr(text)};
}

}  // namespace

std::vector<PrintedDetEq> printed_elliptic_second_order_x1h() {
    return {
        mk("3.1", MomIdx{{2, 0, 0}}, 1,
           "(a*y - c)*B2(x,y,z) - 2*x*y*B3(x,y,z) + D(s1_1(x,y,z), x)"),
        mk("3.2", MomIdx{{0, 2, 0}}, 1,
           "(a*x + d)*B1(x,y,z) + 2*x*y*B3(x,y,z) + D(s1_2(x,y,z), y)"),
        mk("3.3", MomIdx{{0, 0, 2}}, 1,
           "-(a*x + d)*B1(x,y,z) + (c - a*y)*B2(x,y,z) + D(s1_3(x,y,z), z)"),
        mk("3.4", MomIdx{{1, 1, 0}}, 1,
           "(c - a*y)*B1(x,y,z) - (a*x + d)*B2(x,y,z)"
           " - 2*(b - x^2 + y^2)*B3(x,y,z) + D(s1_1(x,y,z), y) + D(s1_2(x,y,z), x)"),
        mk("3.5", MomIdx{{1, 0, 1}}, 1,
           "(a*x + d)*B3(x,y,z) + 2*(b + y^2)*B2(x,y,z) + 2*x*y*B1(x,y,z)"
           " + D(s1_1(x,y,z), z) + D(s1_3(x,y,z), x)"),
        mk("3.6", MomIdx{{0, 1, 1}}, 1,
           "(a*y - c)*B3(x,y,z) - 2*x^2*B1(x,y,z) - 2*x*y*B2(x,y,z)"
           " + D(s1_2(x,y,z), z) + D(s1_3(x,y,z), y)"),
    };
}

std::vector<PrintedDetEq> printed_elliptic_second_order_x2h() {
    return {
        mk("3.7a", MomIdx{{2, 0, 0}}, 1, "D(s2_1(x,y,z), x)"),
        mk("3.7b", MomIdx{{0, 2, 0}}, 1, "D(s2_2(x,y,z), y)"),
        mk("3.7c", MomIdx{{0, 0, 2}}, 1, "D(s2_3(x,y,z), z)"),
        mk("3.8", MomIdx{{1, 1, 0}}, 1, "D(s2_1(x,y,z), y) + D(s2_2(x,y,z), x)"),
        mk("3.9", MomIdx{{0, 1, 1}}, 1,
           "2*B1(x,y,z) + D(s2_2(x,y,z), z) + D(s2_3(x,y,z), y)"),
        // the printed (3.10) carries the opposite overall sign
        mk("3.10", MomIdx{{1, 0, 1}}, -1,
           "2*B2(x,y,z) - D(s2_1(x,y,z), z) - D(s2_3(x,y,z), x)"),
    };
}

bool matches_printed(const DetEqSet& gen, const std::vector<PrintedDetEq>& printed,
                     std::string* diagnostics) {
    bool ok = true;
    std::ostringstream os;
    for (auto& pe : printed) {
        const NormalForm* g = nullptr;
        for (auto& e : gen.eqs)
            if (e.mon == pe.mon) g = &e.residual;
        if (!g) {
            ok = false;
            os << pe.anchor << ": monomial missing in generated set\n";
            continue;
        }
        NormalForm want = normal_form(pe.printed) * NormalForm(Rat(pe.orientation));
        NormalForm diff = *g - want;
        if (!diff.is_zero()) {
            ok = false;
            os << pe.anchor << ": symbolic difference " << diff.to_string() << "\n";
        } else {
            os << pe.anchor << ": term-for-term match (orientation "
               << (pe.orientation > 0 ? "+1" : "-1") << ")\n";
        }
    }
    if (diagnostics) *diagnostics = os.str();
    return ok;
}

}  // namespace ifield
