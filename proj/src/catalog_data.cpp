// Catalogued systems, transcribed once from the source and kept in one
// reviewed data file. Verification (verify_system) is the transcription test:
// residuals surface here, they are never patched in place. Corrections that
// were required are carried as Erratum records next to the printed text.
#include "ifield/catalog_data.hpp"

namespace ifield::data {

namespace {

Expr sub_params(const Expr& e, const ParamMap& params) {
    std::map<std::string, Expr> b;
    for (auto& [k, v] : params) b[k] = Expr::number(v);
    return substitute(e, b);
}

Expr P(const std::string& s, const ParamMap& params) {
    return sub_params(parse_expr(s), params);
}

void fill_params(FieldSystem& sys, const ParamMap& params,
                 const std::vector<std::pair<std::string, std::string>>& decl) {
    sys.symbolic = false;
    for (auto& [name, constraint] : decl) {
        ParamInfo pi;
        pi.name = name;
        pi.constraint = constraint;
        auto it = params.find(name);
        if (it != params.end())
            pi.value = it->second;
        else
            sys.symbolic = true;
        sys.params.push_back(pi);
    }
}

Rat require_value(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw ExprError("parameter " + name + " must be numeric for this system");
    return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// System A: the new integrable system of the a != 0 elliptic cylindrical
// branch. B and W from the "one new integrable system given by" block; the
// s_i^j, m_i blocks follow it.
// ---------------------------------------------------------------------------

const std::map<std::string, std::string>& system_a_strings() {
    static const std::map<std::string, std::string> S = {
        {"B1", "beta2*(c - a*y)"},
        {"B2", "beta2*(a*x + d)"},
        {"B3", "a*beta1 - 3*beta2*(x^2 + y^2)"},
        {"W",
         "beta2*( x*(c*d*beta2*y + omega1) - b*beta2*y^4/2 - beta2*x^6/4"
         " - beta2*y^6/4 + omega2*y + omega3*y^2"
         " + x^2*( -a*b*beta1 - (d^2 - c^2)*beta2/2 - 3*beta2*y^4/4 + omega3 )"
         " + (beta2*x^4/2)*(b - 3*y^2/2)"
         " + (a/2)*(x^2 + y^2)*( (beta1 - a*beta2/2)*(x^2 + y^2)/2 + beta2*(c*y - d*x) ) )"},
        {"s1_1",
         "beta2*( -a^2*y*(x^2 + y^2) + a*c*(x^2 + 3*y^2) - 2*a*d*x*y - 4*b*y^3"
         " + 2*c*d*x - 3*y*(x^2 + y^2)^2 )/2 + a*beta1*y*(x^2 + y^2) + omega2 + 2*omega3*y"},
        {"s1_2",
         "( x*( x^2*(a^2*beta2 - 2*a*beta1 - 4*b*beta2) + 4*a*b*beta1 + 3*a*d*beta2*x"
         " - 2*(c^2 - d^2)*beta2 + 3*beta2*x^4 - 4*omega3 ) - 2*omega1"
         " + y^2*( a*x*(a*beta2 - 2*beta1) + a*d*beta2 + 6*beta2*x^3 )"
         " - 2*beta2*c*y*(a*x + d) + 3*beta2*x*y^4 )/2"},
        // last term printed as beta1*(c*y - d*x); the catalogued (corrected)
        // form carries a*beta1*(c*y - d*x) -- see the erratum record
        {"s1_3",
         "-( a^2*beta1*(x^2 + y^2) + 4*b*d*beta2*x + (c^2 + d^2)*beta1"
         " - 2*beta2*(x^2 + y^2)*(d*x - c*y) )/2"
         " + (beta2/(4*a^3))*((c^2 + d^2)^2 - 4*a^2*b*d^2)"
         " + (a/4)*beta2*(3*(x^2 + y^2)^2 - 4*b*x^2) + a*beta1*(c*y - d*x)"},
        {"s1_3_printed_term", "beta1*(c*y - d*x)"},
        {"s1_3_corrected_term", "a*beta1*(c*y - d*x)"},
        {"m1",
         "(1/(16*a^3))*( 16*a^2*b*beta2^2*d^2*(c*y - d*x)"
         " + 2*a*beta2^2*(c^2 + d^2)^2*(x^2 + y^2) - 4*beta2^2*(c^2 + d^2)^2*(c*y - d*x)"
         " - 4*a^6*beta1*beta2*(x^2 + y^2)^2"
         " - 2*a^5*( 4*b*x^2*(2*beta1^2 + beta2^2*(x^2 + y^2))"
         "   - (x^2 + y^2)*( 2*beta1^2*(x^2 + y^2) + 8*beta1*beta2*(c*y - d*x)"
         "     + 3*beta2^2*(x^2 + y^2)^2 ) )"
         " + 4*a^4*( 4*beta1*y*(2*beta2*c*d*x + omega2)"
         "   + beta1*( x*( beta2*x*(-8*b^2 + 10*b*x^2 + c^2 - 5*d^2 - 3*x^4)"
         "       + 4*omega1 + 4*omega3*x )"
         "     - y^2*( beta2*(-8*b*x^2 + 3*c^2 + d^2 + 9*x^4) - 4*omega3 )"
         "     - beta2*y^4*(2*b + 9*x^2) - 3*beta2*y^6 )"
         "   + beta2^2*( 5*(x^2 + y^2)^2*(d*x - c*y)"
         "     - 4*b*x*(-c*x*y + 2*d*x^2 + d*y^2) ) )"
         " + a^3*beta2*( 16*b^2*beta2*x^4 + 8*beta1*(c^2 + d^2)*(c*y - d*x)"
         "   + (x^2 + y^2)*( -16*omega1*x - 8*(2*omega2*y + 3*omega3*(x^2 + y^2))"
         "     + beta2*( 4*c^2*(y^2 - 3*x^2) - 32*c*d*x*y + 16*d^2*x^2"
         "       + 9*(x^2 + y^2)^3 ) )"
         "   + 32*b*x*(omega1 + omega3*x)"
         "   + 8*b*beta2*( 2*c^2*x^2 + 4*c*d*x*y - d^2*(5*x^2 + y^2)"
         "     - (3*x^2 - 2*y^2)*(x^2 + y^2)^2 ) ) )"},
        {"s2_3", "beta2*((c - a*y)^2 + (a*x + d)^2)/a"},
        {"m2", "beta2^2*((c - a*y)^2 + (a*x + d)^2)^2/(4*a^2)"},
    };
    return S;
}

FieldSystem elliptic_a_nonzero(const ParamMap& params) {
    auto& D = system_a_strings();
    FieldSystem sys;
    sys.id = "ELLIPTIC_A_NONZERO";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cartesian;
    fill_params(sys, params,
                {{"a", "a != 0"},
                 {"b", "b != 0"},
                 {"c", "c >= 0"},
                 {"d", "d >= 0"},
                 {"beta1", ""},
                 {"beta2", ""},
                 {"omega1", ""},
                 {"omega2", ""},
                 {"omega3", ""}});
    if (auto* v = sys.param_value("a"); v && *v == 0)
        throw ExprError("ELLIPTIC_A_NONZERO requires a != 0");
    if (auto* v = sys.param_value("b"); v && *v == 0)
        throw ExprError("ELLIPTIC_A_NONZERO requires b != 0");

    sys.B.chart = Chart::Cartesian;
    sys.B.comp = {P(D.at("B1"), params), P(D.at("B2"), params), P(D.at("B3"), params)};
    sys.W = P(D.at("W"), params);

    // gauge with A3 = -s2_3/2: in it X2 collapses to p3^2
    sys.gauge = OneForm{Chart::Cartesian,
                        {Expr(),
                         P("a*beta1*x - beta2*x^3 - 3*beta2*x*y^2", params),
                         P("-beta2*((c - a*y)^2 + (a*x + d)^2)/(2*a)", params)}};

    IntegralSpec X1;
    X1.chart = Chart::Cartesian;
    X1.alpha[{2, 2}] = Expr::integer(1);
    X1.beta[{2, 2}] = P("a", params);
    X1.gamma[{0, 0}] = P("b", params);
    X1.gamma[{0, 2}] = P("c", params);
    X1.gamma[{1, 2}] = P("d", params);
    X1.s = {P(D.at("s1_1"), params), P(D.at("s1_2"), params), P(D.at("s1_3"), params)};
    X1.m = P(D.at("m1"), params);

    IntegralSpec X2;
    X2.chart = Chart::Cartesian;
    X2.gamma[{2, 2}] = Expr::integer(1);
    X2.s = {Expr(), Expr(), P(D.at("s2_3"), params)};
    X2.m = P(D.at("m2"), params);

    sys.integrals = {X1, X2};
    sys.errata.push_back(
        Erratum{"X1.s3", D.at("s1_3_printed_term"), D.at("s1_3_corrected_term"),
                "printed last term of s1^3 lacks the factor a; with it all "
                "three brackets vanish identically"});
    sys.claims = {
        {ClaimKind::DivBZero, "div B = 0", -1, -1, {}, -1},
        {ClaimKind::DAEqualsB, "dA = B", -1, -1, {}, -1},
        {ClaimKind::BracketZero, "{H,X1} = 0", -1, 0, {}, -1},
        {ClaimKind::BracketZero, "{H,X2} = 0", -1, 1, {}, -1},
        {ClaimKind::BracketZero, "{X1,X2} = 0", 0, 1, {}, -1},
        {ClaimKind::X2GaugeCollapse, "X2 = p3^2 in the documented gauge", -1, 1, {}, -1},
        {ClaimKind::FreeMotionLimit,
         "beta1,beta2 -> 0 gives free motion",
         -1, -1,
         {{"beta1", "0"}, {"beta2", "0"}},
         -1},
        {ClaimKind::CylindricalReductionAtB0D0,
         "b=0, d=0 leading order is generalized cylindrical", -1, -1, {}, -1},
        {ClaimKind::ErratumResidual, "printed s1^3 fails {X1,H}", -1, 0, {}, 0},
    };
    return sys;
}

// ---------------------------------------------------------------------------
// System B: the a = 0, d = 0 branch ("magnetic field and the potential read").
// U1, U2 are the z-profiles of the branch selected by eps = sgn b, with
// U2 = -U1'/delta; b = eps c^2 delta^2 / 4.
// ---------------------------------------------------------------------------

const std::map<std::string, std::string>& system_b_strings() {
    static const std::map<std::string, std::string> S = {
        {"B1", "delta*(2*x*U1 + c*delta*U2)/4 - c*beta2"},
        {"B2", "delta*y*U1/2"},
        {"B3", "3*beta2*(x^2 + y^2) + eps*U2 - beta1"},
        {"W",
         "-eps*((c^2*delta^4 + 4*(eps*delta^2*(x^2 + y^2) - 1))/(64*delta^2))*(U2^2 + eps*U1^2)"
         " - eps*(delta*c*x/8)*U1*U2"
         " - eps*(( c^2*x*( -eps*beta1*delta^2 + beta2*(eps*delta^2*(x^2 + y^2) + 2) )"
         "   + 2*omega1 )/(4*c*delta))*U1"
         " - (eps/8)*( eps*beta2*c^2*delta^2*y^2"
         "   + (x^2 + y^2)*(3*beta2*(x^2 + y^2) - 2*beta1) + 2*omega2 )*U2"
         " + (1/16)*( -4*beta2^2*x^6 + 2*beta2*x^4*(2*beta1 + eps*beta2*c^2*delta^2 - 6*beta2*y^2)"
         "   + 16*beta2*omega1*x"
         "   - y^2*( alpha1^2 - eps*alpha2^2 + 8*beta2*omega2"
         "     + 2*beta2*y^2*(-2*beta1 + eps*c^2*delta^2*beta2 + 2*beta2*y^2) )"
         "   - x^2*( alpha1^2 - eps*alpha2^2"
         "     + 4*beta2*( c^2*(eps*beta1*delta^2 - 2*beta2) + 3*beta2*y^4 - 2*beta1*y^2"
         "       + 2*omega2 ) ) )"},
        {"s1_1",
         "(y/4)*( 2*c*delta*x*U1 + (c^2*delta^2 + 4*eps*(x^2 + y^2))*U2"
         " + 2*beta2*(eps*c^2*delta^2*y^2 + 3*x^4) - 4*x^2*(beta1 - 3*beta2*y^2)"
         " + 6*beta2*y^4 - 4*beta1*y^2 + 4*omega2 )"},
        {"s1_2",
         "(1/(2*delta))*( c^2*(eps*beta2*delta^3*x^3 - eps*beta1*delta^3*x + 2*beta2*delta*x)"
         " - c*(eps + delta^2*x^2)*U1"
         " + delta*( -2*eps*x*(x^2 + y^2)*U2 - 3*beta2*x^5 + 2*x^3*(beta1 - 3*beta2*y^2)"
         "   + x*(-3*beta2*y^4 + 2*beta1*y^2 - 2*omega2) + 2*omega1 ) )"},
        {"s1_3", "(c*y/2)*( -2*beta1 + eps*U2 + 2*beta2*(x^2 + y^2) )"},
        {"m1",
         "(1/(16*(eps*alpha2^2 - alpha1^2)*delta))*("
         "   delta*( 4*(x^2 + y^2)^2 + eps*c^2*delta^2*(x^2 + y^2) + 2*c^2 )"
         "     *( alpha2*U1 - alpha1*U2 )"
         "   + 4*c*x*( eps*delta^2*(x^2 + y^2) + 1 )*( eps*alpha2*U2 - alpha1*U1 )"
         " )*( alpha1*U2 + alpha2*U1 )"
         " - (c/(8*delta))*( -3*delta^2*beta2*x^5"
         "   + ( eps*beta2*(c^2*delta^4 - 4) + delta^2*(2*beta1 - 6*beta2*y^2) )*x^3"
         "   + ( delta^2*( (2*c^2 - 3*y^4)*beta2 + 2*beta1*y^2 - 2*omega2 )"
         "     - eps*( beta1*(c^2*delta^4 - 4) + 4*beta2*y^2 ) )*x"
         "   + 2*delta^2*omega1 )*U1"
         " + (1/4)*( 3*eps*beta2*x^6 + ( beta2*(9*eps*y^2 - c^2*delta^2) - 2*eps*beta1 )*x^4"
         "   + ( eps*( (9*y^4 - c^2)*beta2 - 4*beta1*y^2 + 2*omega2 ) + c^2*delta^2*beta1 )*x^2"
         "   - 2*eps*omega1*x"
         "   + eps*( 3*beta2*y^6 - 2*beta1*y^4 + (c^2*beta2 + 2*omega2)*y^2 - c^2*beta1 )"
         "   + c^2*delta^2*beta2*y^4 )*U2"
         " + (9*beta2^2/16)*(x^8 + y^8)"
         " + (1/8)*( 18*beta2^2*y^2 - 3*beta2*(c^2*delta^2*eps*beta2 + 2*beta1) )*x^6"
         " + (1/16)*( 54*beta2^2*y^4 - beta2*(8*c^2*delta^2*eps*beta2 + 36*beta1)*y^2"
         "   + c^2*(c^2*delta^4 - 12)*beta2^2 + (10*eps*c^2*delta^2*beta1 + 12*omega2)*beta2"
         "   - 4*eps*alpha2^2 + 4*beta1^2 )*x^4"
         " + (1/4)*( c*delta*alpha1*alpha2 - 4*beta2*omega1 )*x*(x^2 + y^2)"
         " + (1/16)*( 36*beta2^2*y^6 + 2*beta2*(eps*c^2*delta^2*beta2 - 18*beta1)*y^4"
         "   + ( (8*eps*c^2*delta^2*beta1 - 8*c^2*beta2 + 24*omega2)*beta2"
         "     - 8*eps*alpha2^2 + 8*beta1^2 )*y^2"
         "   - 2*delta^2*c^4*beta2*(delta^2*beta1 - 2*eps*beta2)"
         "   + c^2*( 8*beta1*beta2 - eps*delta^2*(4*omega2*beta2 + 4*beta1^2 + alpha1^2) )"
         "   - 8*omega2*beta1 )*x^2"
         " + (1/(4*delta))*( eps*(2*c^2*delta^3*beta2*omega1 + c*alpha1*alpha2)"
         "   + 4*delta*beta1*omega1 )*x"
         " + (beta2/4)*(eps*c^2*delta^2*beta2 - 3*beta1)*y^6"
         " + (1/8)*( 2*beta1^2 + 2*c^2*beta2^2 + (6*omega2 - eps*c^2*delta^2*beta1)*beta2"
         "   - 2*eps*alpha2^2 )*y^4"
         " - (1/16)*( 8*(c^2*beta2 + omega2)*beta1 + c^2*delta^2*alpha2^2 )*y^2"},
        {"s2_1", "-eps*y*U2"},
        {"s2_2", "c*delta*U1/2 + eps*x*U2"},
        {"s2_3", "2*beta2*c*y"},
        {"m2",
         "(1/16)*( -c^2*delta^2 + 2/delta^2 - 4*eps*(x^2 + y^2) )*(U1^2 + eps*U2^2)"
         " - eps*(c*delta*x/2)*U1*U2"
         " - ( eps*omega1/(c*delta) + (c*delta*x/2)*(beta2*(x^2 + y^2) - beta1) )*U1"
         " - (eps/4)*( -2*beta2*c^2 - y^2*(2*beta1 - eps*c^2*delta^2*beta2) + 3*beta2*x^4"
         "   - 2*x^2*(beta1 - 3*beta2*y^2) + 3*beta2*y^4 + 2*omega2 )*U2"
         " + c^2*beta2^2*y^2 + (1/4)*(eps*alpha2^2 - alpha1^2)*(x^2 + y^2)"},
        // simulation gauge (dA = B, verified): atom-polynomial, regular at z=0
        {"A1", "-(eps/2)*y*U2"},
        {"A2",
         "(eps/2)*x*U2 + c*delta*U1/4 + c*beta2*z + beta2*x^3 + 3*beta2*x*y^2 - beta1*x"},
    };
    return S;
}

std::map<std::string, Expr> u_branch(int eps) {
    if (eps == 1) {
        return {{"U1", parse_expr("alpha1*sinh(delta*z) + alpha2*cosh(delta*z)")},
                {"U2", parse_expr("-alpha2*sinh(delta*z) - alpha1*cosh(delta*z)")}};
    }
    return {{"U1", parse_expr("alpha2*cos(delta*z) - alpha1*sin(delta*z)")},
            {"U2", parse_expr("alpha2*sin(delta*z) + alpha1*cos(delta*z)")}};
}

FieldSystem elliptic_a_zero(const ParamMap& params) {
    auto& D = system_b_strings();
    FieldSystem sys;
    sys.id = "ELLIPTIC_A_ZERO";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cartesian;
    fill_params(sys, params,
                {{"eps", "+1 or -1 (sign of b; required numeric)"},
                 {"delta", "delta = 2 sqrt(|b|)/c > 0"},
                 {"c", "c != 0"},
                 {"alpha1", ""},
                 {"alpha2", "eps*alpha2^2 - alpha1^2 != 0"},
                 {"beta1", ""},
                 {"beta2", ""},
                 {"omega1", ""},
                 {"omega2", ""}});
    Rat eps = require_value(params, "eps");
    if (eps != 1 && eps != -1)
        throw ExprError("ELLIPTIC_A_ZERO requires eps = +1 or -1");
    if (auto* v = sys.param_value("c"); v && *v == 0)
        throw ExprError("ELLIPTIC_A_ZERO requires c != 0");
    if (auto* v = sys.param_value("delta"); v && *v <= 0)
        throw ExprError("ELLIPTIC_A_ZERO requires delta > 0");
    {
        auto* a1 = sys.param_value("alpha1");
        auto* a2 = sys.param_value("alpha2");
        if (a1 && a2 && eps * (*a2) * (*a2) - (*a1) * (*a1) == 0)
            throw ExprError("ELLIPTIC_A_ZERO: eps*alpha2^2 - alpha1^2 = 0 is "
                            "outside the paper's solution (m1 denominator)");
    }

    std::map<std::string, Expr> u = u_branch(int(eps.get_num().get_si()));
    auto E = [&](const std::string& key) {
        return sub_params(substitute(parse_expr(D.at(key)), u), params);
    };

    sys.B.chart = Chart::Cartesian;
    sys.B.comp = {E("B1"), E("B2"), E("B3")};
    sys.W = E("W");
    sys.gauge = OneForm{Chart::Cartesian, {E("A1"), E("A2"), Expr()}};

    IntegralSpec X1;
    X1.chart = Chart::Cartesian;
    X1.alpha[{2, 2}] = Expr::integer(1);
    X1.gamma[{0, 0}] = P("eps*c^2*delta^2/4", params);  // = b
    X1.gamma[{0, 2}] = P("c", params);
    X1.s = {E("s1_1"), E("s1_2"), E("s1_3")};
    X1.m = E("m1");

    IntegralSpec X2;
    X2.chart = Chart::Cartesian;
    X2.gamma[{2, 2}] = Expr::integer(1);
    X2.s = {E("s2_1"), E("s2_2"), E("s2_3")};
    X2.m = E("m2");

    sys.integrals = {X1, X2};
    sys.claims = {
        {ClaimKind::DivBZero, "div B = 0", -1, -1, {}, -1},
        {ClaimKind::DAEqualsB, "dA = B", -1, -1, {}, -1},
        {ClaimKind::URelation, "U2 = -U1'/delta", -1, -1, {}, -1},
        {ClaimKind::BracketZero, "{H,X1} = 0", -1, 0, {}, -1},
        {ClaimKind::BracketZero, "{H,X2} = 0", -1, 1, {}, -1},
        {ClaimKind::BracketZero, "{X1,X2} = 0", 0, 1, {}, -1},
        {ClaimKind::FreeMotionLimit,
         "alpha1,alpha2,beta1,beta2 -> 0 gives free motion",
         -1, -1,
         {{"alpha1", "0"}, {"alpha2", "0"}, {"beta1", "0"}, {"beta2", "0"}},
         -1},
    };
    return sys;
}

// ---------------------------------------------------------------------------
// Standard elliptic cylindrical limit system ("The system is determined by"):
// c,d -> 0 followed by a -> 0 with a*beta1 -> beta1t. The integrals are
// produced by that exact limit of the System A integrals.
// ---------------------------------------------------------------------------

namespace {

Expr limit_a_to_zero(const std::string& expr_text, const ParamMap& params) {
    Expr e = parse_expr(expr_text);
    e = substitute(e, {{"c", Expr::integer(0)},
                       {"d", Expr::integer(0)},
                       {"beta1", parse_expr("beta1t/a")}});
    NormalForm nf = normal_form(e);
    int a_gen = Symbols::instance().param("a");
    return sub_params(to_expr(limit_param_to_zero(nf, a_gen)), params);
}

}  // namespace

FieldSystem limit_standard(const ParamMap& params) {
    auto& D = system_a_strings();
    FieldSystem sys;
    sys.id = "LIMIT_STANDARD";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cartesian;
    fill_params(sys, params,
                {{"beta1t", ""},
                 {"b", "b != 0"},
                 {"beta2", ""},
                 {"omega1", ""},
                 {"omega2", ""},
                 {"omega3", ""}});

    sys.B.comp = {Expr(), Expr(), P("beta1t - 3*beta2*(x^2 + y^2)", params)};
    sys.W = P("beta2*( (beta1t/4)*(x^2 + y^2)^2 + (b*beta2/2)*(x^4 - y^4)"
              " - (beta2/4)*(x^2 + y^2)^3 - b*beta1t*x^2 + omega3*(x^2 + y^2)"
              " + omega1*x + omega2*y )",
              params);
    sys.gauge = poincare_gauge(sys.B);

    IntegralSpec X1;
    X1.alpha[{2, 2}] = Expr::integer(1);
    X1.gamma[{0, 0}] = P("b", params);
    X1.s = {limit_a_to_zero(D.at("s1_1"), params), limit_a_to_zero(D.at("s1_2"), params),
            limit_a_to_zero(D.at("s1_3"), params)};
    X1.m = limit_a_to_zero(D.at("m1"), params);

    IntegralSpec X2;
    X2.gamma[{2, 2}] = Expr::integer(1);
    X2.s = {Expr(), Expr(), limit_a_to_zero(D.at("s2_3"), params)};
    X2.m = limit_a_to_zero(D.at("m2"), params);

    sys.integrals = {X1, X2};
    sys.claims = {
        {ClaimKind::DivBZero, "div B = 0", -1, -1, {}, -1},
        {ClaimKind::DAEqualsB, "dA = B", -1, -1, {}, -1},
        {ClaimKind::WZIndependent, "B3 = f(x^2+y^2), W z-independent", -1, -1, {}, -1},
        {ClaimKind::BracketZero, "{H,X1} = 0", -1, 0, {}, -1},
        {ClaimKind::BracketZero, "{H,X2} = 0", -1, 1, {}, -1},
        {ClaimKind::BracketZero, "{X1,X2} = 0", 0, 1, {}, -1},
    };
    return sys;
}

// ---------------------------------------------------------------------------
// Class III ("magnetic field and the electrostatic potential", known system):
// constant B3, W = w0/rho^2 - bphi^2 rho^2 / 8, with the commuting first order
// integrals p_Z^A and p_phi^A - (bphi/2) r^2.
// ---------------------------------------------------------------------------

FieldSystem class_iii(const ParamMap& params) {
    FieldSystem sys;
    sys.id = "CLASS_III";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cartesian;
    fill_params(sys, params, {{"bphi", ""}, {"w0", ""}});
    sys.B.comp = {Expr(), Expr(), P("bphi", params)};
    sys.W = P("w0/(x^2 + y^2) - (bphi^2/8)*(x^2 + y^2)", params);
    sys.gauge = poincare_gauge(sys.B);  // symmetric gauge
    sys.exclusion_rho_min = 1e-3;       // W singular on the z axis

    IntegralSpec X1;  // p_Z^A
    X1.s = {Expr(), Expr(), Expr::integer(1)};
    X1.m = Expr();
    IntegralSpec X2;  // p_phi^A - (bphi/2) r^2 = l_3^A - (bphi/2)(x^2+y^2)
    X2.s = {parse_expr("-y"), parse_expr("x"), Expr()};
    X2.m = P("-(bphi/2)*(x^2 + y^2)", params);

    sys.integrals = {X1, X2};
    sys.claims = {
        {ClaimKind::DivBZero, "div B = 0", -1, -1, {}, -1},
        {ClaimKind::DAEqualsB, "dA = B", -1, -1, {}, -1},
        {ClaimKind::BracketZero, "{H,X1} = 0", -1, 0, {}, -1},
        {ClaimKind::BracketZero, "{H,X2} = 0", -1, 1, {}, -1},
        {ClaimKind::BracketZero, "{X1,X2} = 0", 0, 1, {}, -1},
    };
    return sys;
}

// ---------------------------------------------------------------------------
// Appendix special case ("is characterized by"): field of a line-current type
// with two commuting first order integrals. The printed X2 = p_Z^A + beta/(2
// rho) does not commute with H for the printed B; the verified integral is
// p_Z^A + beta/rho (erratum record below).
// ---------------------------------------------------------------------------

FieldSystem special_first_order(const ParamMap& params) {
    FieldSystem sys;
    sys.id = "SPECIAL_FIRST_ORDER";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cartesian;
    fill_params(sys, params,
                {{"beta", ""}, {"omega", ""}, {"c", ""}, {"a", "a != 0"}});
    if (auto* v = sys.param_value("a"); v && *v == 0)
        throw ExprError("SPECIAL_FIRST_ORDER requires a != 0");

    const std::string rho = "sqrt(x^2 + (y - c/a)^2)";
    sys.B.comp = {P("beta*(y - c/a)/" + rho + "^3", params),
                  P("-beta*x/" + rho + "^3", params), Expr()};
    sys.W = P("omega/" + rho + " - beta^2/(4*(x^2 + (y - c/a)^2))", params);
    sys.gauge = OneForm{Chart::Cartesian,
                        {Expr(), Expr(), P("-beta/" + rho, params)}};
    sys.exclusion_rho_min = 1e-3;  // singular on the shifted axis

    IntegralSpec X1;  // l_Z about the shifted axis: x P2 - (y - c/a) P1
    X1.s = {P("-(y - c/a)", params), parse_expr("x"), Expr()};
    X1.m = Expr();
    IntegralSpec X2;  // corrected: p_Z^A + beta/rho
    X2.s = {Expr(), Expr(), Expr::integer(1)};
    X2.m = P("beta/" + rho, params);

    sys.integrals = {X1, X2};
    sys.errata.push_back(Erratum{
        "X2.m", "beta/(2*" + rho + ")", "beta/" + rho,
        "the printed scalar part beta/(2 rho) leaves {H,X2} = "
        "-beta*(x*P1 + (y-c/a)*P2)/(2 rho^3); beta/rho commutes"});
    sys.claims = {
        {ClaimKind::DivBZero, "div B = 0", -1, -1, {}, -1},
        {ClaimKind::DAEqualsB, "dA = B", -1, -1, {}, -1},
        {ClaimKind::BracketZero, "{X1,X2} = 0 (printed pair commutes)", 0, 1, {}, -1},
        {ClaimKind::BracketZero, "{H,X1} = 0", -1, 0, {}, -1},
        {ClaimKind::BracketZero, "{H,X2} = 0 (corrected X2)", -1, 1, {}, -1},
        {ClaimKind::ErratumResidual, "printed X2 fails {X2,H}", -1, 1, {}, 0},
    };
    return sys;
}

// ---------------------------------------------------------------------------
// c = d = 0 leading-order solution ("a general solution of the form"),
// cylindrical chart. Only B and the s-functions are determined at leading
// order; W and the m's are not part of the record, so the claims cover the
// 18 second-order determining residuals. The S^Z_102 term of B_Z is printed
// with an extra 1/a (erratum record below).
// ---------------------------------------------------------------------------

FieldSystem cd_zero_leading(const ParamMap& params) {
    FieldSystem sys;
    sys.id = "CD_ZERO_LEADING";
    sys.anchor = catalog_anchor(sys.id);
    sys.chart = Chart::Cylindrical;
    fill_params(sys, params,
                {{"a", "a != 0"}, {"b", "b != 0"},
                 {"SZ101", ""}, {"SZ102", ""}, {"SZ103", ""},
                 {"SZ21", ""}, {"SZ22", ""}, {"SZ23", ""}, {"SZ24", ""},
                 {"Sr110", ""}, {"Sr120", ""}, {"Sr211", ""}, {"Sr212", ""},
                 {"Sphi10", ""}});
    if (auto* v = sys.param_value("a"); v && *v == 0)
        throw ExprError("CD_ZERO_LEADING requires a != 0");
    sys.has_W = false;

    // theta = 2Z/a - phi enters through the addition formulas
    auto E = [&](const std::string& s) { return P(s, params); };
    const std::string sth = "(sin(2*Z/a)*cos(phi) - cos(2*Z/a)*sin(phi))";
    const std::string cth = "(cos(2*Z/a)*cos(phi) + sin(2*Z/a)*sin(phi))";
    const std::string sth_p = "(sin(2*Z/a)*cos(phi) + cos(2*Z/a)*sin(phi))";
    const std::string cth_p = "(cos(2*Z/a)*cos(phi) - sin(2*Z/a)*sin(phi))";

    sys.B.chart = Chart::Cylindrical;
    sys.B.comp = {
        E("(r/a)*(Sr212*" + sth + " - Sr211*" + cth + ")"),
        E("3*SZ21*r^5 + 2*SZ22*r^3 + SZ23*r - (Sr211/a)*" + sth +
          " - (Sr212/a)*" + cth),
        // corrected: the printed B_Z has SZ102/a inside the overall 1/a
        E("(1/a)*( -SZ101*r^3 - SZ102*r + SZ21*r^5*(6*b*(cos(phi)^2 - sin(phi)^2) - 7*r^2)"
          " + SZ22*r^3*(2*b*(cos(phi)^2 - sin(phi)^2) - 5*r^2 - 2*b) - SZ23*b*r )")};
    sys.W = Expr();

    IntegralSpec X1;
    X1.chart = Chart::Cylindrical;
    X1.alpha[{2, 2}] = Expr::integer(1);
    X1.beta[{2, 2}] = P("a", params);
    X1.gamma[{0, 0}] = P("b", params);
    X1.s = {
        E("-(b*SZ101/(3*a))*r^3*2*sin(phi)*cos(phi) - (b*SZ102/a)*r*2*sin(phi)*cos(phi)"
          " + Sr110*cos(phi) + Sr120*sin(phi)"
          " + (b*SZ21/(5*a))*r^5*(-5*r^2*2*sin(phi)*cos(phi) + 3*b*sin(4*phi))"
          " + (b*SZ22/(3*a))*r^3*(2*b*(cos(phi)^2 - sin(phi)^2) - 3*r^2 - 2*b)"
          "   *2*sin(phi)*cos(phi)"
          " - (b^2*SZ23/a)*r*2*sin(phi)*cos(phi)"
          " - (Sr211/4)*((a^2 + 2*b)*" + cth + " + 2*b*" + cth_p + ")"
          " + (Sr212/4)*((a^2 + 2*b)*" + sth + " + 2*b*" + sth_p + ")"),
        E("-(2*SZ101/(3*a))*r^2*(b*(cos(phi)^2 - sin(phi)^2) - 3*r^2/4)"
          " - (SZ102/a)*(b*(cos(phi)^2 - sin(phi)^2) - r^2) + Sphi10"
          " - Sr110*sin(phi)/r + Sr120*cos(phi)/r"
          " + (SZ21/(20*a))*r^4*(35*r^4 + 10*a^2*r^2"
          "   + 36*b^2*(cos(phi)^2 - sin(phi)^2)^2"
          "   - 80*b*r^2*(cos(phi)^2 - sin(phi)^2) + 12*b^2)"
          " + (SZ22/(6*a))*r^2*(10*r^4 + (3*a^2 + 6*b)*r^2"
          "   + 4*b^2*(cos(phi)^2 - sin(phi)^2)^2"
          "   - 18*b*r^2*(cos(phi)^2 - sin(phi)^2)"
          "   - 8*b^2*(cos(phi)^2 - sin(phi)^2) + 4*b^2)"
          " + (SZ23/(2*a))*((a^2 + 2*b)*r^2 - 2*b^2*(cos(phi)^2 - sin(phi)^2))"
          " - (Sr211/(4*r))*((a^2 + 4*r^2 + 2*b)*" + sth + " - 2*b*" + sth_p + ")"
          " - (Sr212/(4*r))*((a^2 + 4*r^2 + 2*b)*" + cth + " - 2*b*" + cth_p + ")"),
        E("(SZ101/4)*r^4 + (SZ102/2)*r^2 + SZ103"
          " - (SZ21/8)*r^6*(12*b*(cos(phi)^2 - sin(phi)^2) - 7*r^2 + 4*b)"
          " - SZ22*r^4*(b*(cos(phi)^2 - sin(phi)^2) - 5*r^2/6)"
          " - (b*SZ23/2)*r^2*(cos(phi)^2 - sin(phi)^2)"
          " - (a*Sr211/2)*r*" + sth + " - (a*Sr212/2)*r*" + cth)};
    X1.m = Expr();

    IntegralSpec X2;
    X2.chart = Chart::Cylindrical;
    X2.gamma[{2, 2}] = Expr::integer(1);
    X2.s = {E("Sr211*" + cth + " - Sr212*" + sth),
            E("(Sr211*" + sth + " + Sr212*" + cth + ")/r"),
            E("SZ21*r^6 + SZ22*r^4 + SZ23*r^2 + SZ24")};
    X2.m = Expr();

    sys.integrals = {X1, X2};
    sys.errata.push_back(Erratum{
        "B.Z", "-(SZ102/a)*r (inside the overall 1/a)", "-SZ102*r (inside the overall 1/a)",
        "with the printed extra 1/a the second-order residuals are "
        "proportional to SZ102*(a - 1); with the corrected term all vanish"});
    sys.claims = {
        {ClaimKind::DivBZero, "dB = 0 (coordinate components)", -1, -1, {}, -1},
        {ClaimKind::LeadingDetEqsZero,
         "second-order determining residuals vanish", -1, -1, {}, -1},
        {ClaimKind::ErratumResidual, "printed B_Z term fails the residuals", -1, -1, {}, 0},
    };
    return sys;
}

}  // namespace ifield::data
