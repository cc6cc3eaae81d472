// Printed leading-order equation sets and their solution families, entered
// once and checked by substitution. Everything here is plain expression data;
// the checks are normal-form zero tests.
#include "ifield/fixtures.hpp"

#include <functional>
#include <sstream>

#include "ifield/detgen.hpp"

namespace ifield {

namespace {

using Bindings = std::map<std::string, Expr>;

Bindings parse_bindings(const std::vector<std::pair<std::string, std::string>>& kv) {
    Bindings b;
    for (auto& [k, v] : kv) b[k] = parse_expr(v);
    return b;
}

std::vector<CheckResult> residual_checks(const std::string& stem,
                                         const std::vector<std::string>& eqs,
                                         const Bindings& candidate) {
    std::vector<CheckResult> out;
    int n = 0;
    for (auto& etext : eqs) {
        ++n;
        Expr resid = substitute(parse_expr(etext), candidate);
        NormalForm nf = normal_form(resid);
        CheckResult r;
        r.name = stem + " eq " + std::to_string(n);
        r.pass = nf.is_zero();
        if (!r.pass) r.detail = "residual: " + nf.to_string().substr(0, 300);
        out.push_back(r);
    }
    return out;
}

// ---- printed cylindrical equation sets -------------------------------------

// {H, X} second-order set for an l3^2-leading integral (the "solution is
// known" block's constraints); s denotes its first-order functions
std::vector<std::string> l3sq_hx_eqs(const std::string& s) {
    return {
        "D(" + s + "Z(r,phi,Z), Z)",
        "r^2*(-2*Br(r,phi,Z) + D(" + s + "phi(r,phi,Z), Z)) + D(" + s + "Z(r,phi,Z), phi)",
        "D(" + s + "r(r,phi,Z), Z) + D(" + s + "Z(r,phi,Z), r)",
        s + "r(r,phi,Z)/r + D(" + s + "phi(r,phi,Z), phi)",
        "r^2*(2*BZ(r,phi,Z) + D(" + s + "phi(r,phi,Z), r)) + D(" + s + "r(r,phi,Z), phi)",
        "D(" + s + "r(r,phi,Z), r)",
    };
}

std::vector<std::string> spheroidal_hx1_eqs() {
    return {
        "2*r*Z*Bphi(r,phi,Z) + a*Br(r,phi,Z) - D(s1Z(r,phi,Z), Z)",
        "2*r*Z*BZ(r,phi,Z) + 2*(b - Z^2)*Br(r,phi,Z) + r^2*D(s1phi(r,phi,Z), Z)"
        " + D(s1Z(r,phi,Z), phi)",
        "2*(Z^2 - r^2 - b)*Bphi(r,phi,Z) + a*BZ(r,phi,Z) + D(s1r(r,phi,Z), Z)"
        " + D(s1Z(r,phi,Z), r)",
        "a*r*Br(r,phi,Z) + r*D(s1phi(r,phi,Z), phi) + s1r(r,phi,Z)",
        "2*r^2*BZ(r,phi,Z) - a*r^2*Bphi(r,phi,Z) - 2*r*Z*Br(r,phi,Z)"
        " + r^2*D(s1phi(r,phi,Z), r) + D(s1r(r,phi,Z), phi)",
        "2*r*Z*Bphi(r,phi,Z) + D(s1r(r,phi,Z), r)",
    };
}

std::vector<std::string> spheroidal_x1x2_eqs() {
    return {
        "-a*r^2*D(s2phi(r,phi,Z), Z) + 2*r*(s2r(r,phi,Z) - s1r(r,phi,Z))"
        " + 2*Z*s2Z(r,phi,Z)",
        "2*r*(Z^2 - b)*D(s2phi(r,phi,Z), Z) + 2*Z*r^2*D(s2phi(r,phi,Z), r)"
        " - 2*r^3*D(s1phi(r,phi,Z), Z) + a*s2r(r,phi,Z)",
        "r*D(s2r(r,phi,Z), Z) + s2Z(r,phi,Z)",
        "a*r*(2*Br(r,phi,Z) - D(s2phi(r,phi,Z), Z)) + 2*Z*D(s2r(r,phi,Z), Z)"
        " - 2*s2r(r,phi,Z)",
        "2*(r^2 - Z^2 + b)*D(s2r(r,phi,Z), Z) + a*D(s2r(r,phi,Z), phi)"
        " + 2*Z*s2r(r,phi,Z) + 2*r*s2Z(r,phi,Z)",
        "2*r^2*(a*Bphi(r,phi,Z) + D(s2phi(r,phi,Z), r) - D(s1phi(r,phi,Z), r))"
        " + 2*r*Z*D(s2phi(r,phi,Z), Z) - a*D(s2r(r,phi,Z), Z)",
    };
}

std::vector<std::string> circparabolic_hx2_eqs() {
    return {
        "r*Bphi(r,phi,Z) - D(s2r(r,phi,Z), r)",
        "r*Bphi(r,phi,Z) - a*Br(r,phi,Z) + D(s2Z(r,phi,Z), Z)",
        "a*r*Br(r,phi,Z) + r*D(s2phi(r,phi,Z), phi) + s2r(r,phi,Z)",
        "a*BZ(r,phi,Z) - 2*Z*Bphi(r,phi,Z) + D(s2Z(r,phi,Z), r) + D(s2r(r,phi,Z), Z)",
        "2*Z*Br(r,phi,Z) - r*BZ(r,phi,Z) + r^2*D(s2phi(r,phi,Z), Z)"
        " + D(s2Z(r,phi,Z), phi)",
        "r*Br(r,phi,Z) - a*r^2*Bphi(r,phi,Z) + r^2*D(s2phi(r,phi,Z), r)"
        " + D(s2r(r,phi,Z), phi)",
    };
}

std::vector<std::string> circparabolic_x1x2_eqs() {
    return {
        "r*D(s1r(r,phi,Z), Z) + s1Z(r,phi,Z)",
        "a*r^2*D(s1phi(r,phi,Z), Z) + 2*r*s2r(r,phi,Z) + s1Z(r,phi,Z)",
        "-2*a*r*Br(r,phi,Z) + a*r*D(s1phi(r,phi,Z), Z) + D(s1r(r,phi,Z), Z)",
        "2*r^3*D(s2phi(r,phi,Z), Z) + r^2*D(s1phi(r,phi,Z), r)"
        " + 2*r*Z*D(s1phi(r,phi,Z), Z) - a*s1r(r,phi,Z)",
        "-2*a*r^2*Bphi(r,phi,Z) + 2*r^2*D(s2phi(r,phi,Z), r) + r*D(s1phi(r,phi,Z), Z)"
        " + a*D(s1r(r,phi,Z), Z)",
        "2*a*r^2*BZ(r,phi,Z) + a*r^2*D(s1phi(r,phi,Z), r) - 2*Z*D(s1r(r,phi,Z), Z)"
        " + s1r(r,phi,Z)",
    };
}

std::vector<std::string> nocoord_hx1_eqs() {
    return {
        "D(s1Z(r,phi,Z), Z)",
        "D(s1r(r,phi,Z), r)",
        "2*(a - r^2)*Br(r,phi,Z) + D(s1Z(r,phi,Z), phi) + r^2*D(s1phi(r,phi,Z), Z)",
        "-2*a*Bphi(r,phi,Z) + D(s1Z(r,phi,Z), r) + D(s1r(r,phi,Z), Z)",
        "r*D(s1phi(r,phi,Z), phi) + s1r(r,phi,Z)",
        "2*r^2*BZ(r,phi,Z) + D(s1r(r,phi,Z), phi) + r^2*D(s1phi(r,phi,Z), r)",
    };
}

std::vector<std::string> nocoord_hx2_eqs() {
    return {
        "Br(r,phi,Z) - D(s2Z(r,phi,Z), Z)",
        "D(s2r(r,phi,Z), r)",
        "2*b*Br(r,phi,Z) + D(s2Z(r,phi,Z), phi) + r^2*D(s2phi(r,phi,Z), Z)",
        "BZ(r,phi,Z) - 2*b*Bphi(r,phi,Z) + D(s2Z(r,phi,Z), r) + D(s2r(r,phi,Z), Z)",
        "r*Br(r,phi,Z) + r*D(s2phi(r,phi,Z), phi) + s2r(r,phi,Z)",
        "-r^2*Bphi(r,phi,Z) + D(s2r(r,phi,Z), phi) + r^2*D(s2phi(r,phi,Z), r)",
    };
}

std::vector<std::string> nocoord_x1x2_eqs() {
    return {
        "r*D(s1phi(r,phi,Z), Z) + 2*s2r(r,phi,Z)",
        "2*r^3*D(s2phi(r,phi,Z), Z) + 2*b*r*D(s1phi(r,phi,Z), Z)"
        " - 2*a*r*D(s2phi(r,phi,Z), Z) - s1r(r,phi,Z)",
        "2*(r^2 - a)*Br(r,phi,Z) - r^2*D(s1phi(r,phi,Z), Z)",
        "-2*r^2*Bphi(r,phi,Z) + D(s1r(r,phi,Z), Z) + 2*r^2*D(s2phi(r,phi,Z), r)",
        "2*r^2*BZ(r,phi,Z) - 2*b*D(s1r(r,phi,Z), Z) + 2*a*D(s2r(r,phi,Z), Z)"
        " + r^2*D(s1phi(r,phi,Z), r)",
    };
}

// printed second-order {X1,X2} equations of the elliptic cylindrical case
// (after the X2 second-order solution was substituted)
std::vector<std::string> elliptic_x1x2_eqs() {
    return {
        "2*y*S212(z) - (c - a*y)*(y*D(S22(z), z) + D(S211(z), z))",
        "(a*x + d)*(x*D(S22(z), z) - D(S212(z), z)) + 2*x*S211(z)",
        "2*D(s1_3(x,y,z), z) - (a*(x^2 + y^2) - c*y + d*x)*D(S22(z), z)"
        " + (c - a*y)*D(S211(z), z) + (a*x + d)*D(S212(z), z)",
        "(c*x - (2*a*x + d)*y)*D(S22(z), z) - (a*x + d)*D(S211(z), z)"
        " + (a*y - c)*D(S212(z), z) + 2*b*S22(z) - 2*x*S212(z) - 2*y*S211(z)",
        "2*(D(s1_1(x,y,z), z) + y*(b + x^2 + y^2)*D(S22(z), z)"
        " + (b + y^2)*D(S211(z), z) - x*y*D(S212(z), z)) - a*S212(z) - d*S22(z)",
        "2*(D(s1_2(x,y,z), z) - x*(x^2 + y^2)*D(S22(z), z) + x^2*D(S212(z), z)"
        " - x*y*D(S211(z), z)) + a*S211(z) + c*S22(z)",
    };
}

// ---- fixtures ---------------------------------------------------------------

std::vector<CheckResult> fixture_l3sq_solution() {
    Bindings cand = parse_bindings({
        {"Br",
         "(r^2*D(S2phi(r,Z), Z) - r*(D(Sr21(phi), phi, phi) + Sr21(phi))"
         " + D(SZ20(phi), phi))/(2*r^2)"},
        {"BZ",
         "-(r^2*D(S2phi(r,Z), r) + Z*(D(Sr21(phi), phi, phi) + Sr21(phi))"
         " + D(Sr20(phi), phi, phi) + Sr20(phi))/(2*r^2)"},
        {"s2r", "Z*D(Sr21(phi), phi) + D(Sr20(phi), phi)"},
        {"s2phi", "-(Z*Sr21(phi) + Sr20(phi))/r + S2phi(r,Z)"},
        {"s2Z", "-r*D(Sr21(phi), phi) + SZ20(phi)"},
    });
    return residual_checks("l3^2 integral set", l3sq_hx_eqs("s2"), cand);
}

std::vector<CheckResult> fixture_spheroidal_leading() {
    // gamma stands for sqrt(b): register gamma^2 -> b once
    auto& S = Symbols::instance();
    int g = S.param("gamma");
    S.set_param_relation(g, store_poly(Poly::gen(S.param("b"))));
    const std::string Ep = "exp(2*gamma*phi/a)";
    const std::string Em = "exp(-2*gamma*phi/a)";
    Bindings cand = parse_bindings({
        {"Br",
         "-((a^2 + 4*b)*r^3*(S212*" + Ep + " + S213*" + Em + ")"
         " + 2*a*Z*(S110*r^2 + S120*(Z^2 - b)))/(2*a^2*r^4)"},
        {"Bphi", "(S120*(3*Z^2 - 3*b) + S110*r^2)/(2*r^5)"},
        {"BZ",
         "-(4*(a^2 + 4*b)*r^3*(S212*(Z - gamma)*" + Ep + " + (Z + gamma)*S213*" + Em + ")"
         " + 8*a*((a/2)*Sphi211*r^6 + (S110*Z^2 - (3*a^2/8)*S120 - b*(S110 - S120/2))*r^2"
         " + S120*(Z^2 - b)^2))/(8*a^2*r^5)"},
        {"s1r",
         "((a^2 - 4*b)*r^3*(S212*" + Ep + " + S213*" + Em + ")"
         " + 2*a*Z*(S110*r^2 + S120*(Z^2 - b)))/(2*a*r^3)"},
        {"s1phi",
         "(16*a*gamma*r^3*(S212*" + Ep + " - S213*" + Em + ")"
         " + a^2*((-2*S110 + 3*S120)*r^2 - 3*S120*(Z^2 - b))"
         " + 4*a*r^4*(Z^2*Sphi211 + Sphi211*r^2 + 2*Sphi10)"
         " + 4*b*((2*S110 - S120)*r^2 + S120*(Z^2 - b)))/(8*a*r^4)"},
        {"s1Z",
         "(-8*(a^2 + 4*b)*r^3*(S212*(Z - gamma)*" + Ep + " + S213*(Z + gamma)*" + Em + ")"
         " + 8*a*((a/2)*Sphi211*r^6 + 2*SZ10*r^4 + (3/8)*S120*(a^2 + 4*b)*r^2"
         " + S120*(Z^2 - b)^2))/(16*a*r^4)"},
        {"s2r",
         "(2*gamma/a)*(S212*(Z - gamma)*" + Ep + " - S213*(Z + gamma)*" + Em + ")"},
        {"s2phi",
         "(-8*a*r^3*(S212*(Z - gamma)*" + Ep + " + S213*(Z + gamma)*" + Em + ")"
         " + 4*a*Sphi211*r^6 + 8*a*Sphi212*r^4 + (3*a^2*S120 - 4*S120*b"
         " - 8*S110*(Z^2 - b))*r^2 - 4*S120*(Z^2 - b)^2)/(8*a*r^4)"},
        {"s2Z", "-(2*gamma*r/a)*(S212*" + Ep + " - S213*" + Em + ")"},
    });
    auto out = residual_checks("{X1,H} set", spheroidal_hx1_eqs(), cand);
    auto hx2 = residual_checks("{X2,H} set", l3sq_hx_eqs("s2"), cand);
    auto x12 = residual_checks("{X1,X2} set", spheroidal_x1x2_eqs(), cand);
    out.insert(out.end(), hx2.begin(), hx2.end());
    out.insert(out.end(), x12.begin(), x12.end());
    return out;
}

std::vector<CheckResult> fixture_circparabolic_leading() {
    const std::string Fp = "exp(phi/a)";
    const std::string Fm = "exp(-phi/a)";
    Bindings cand = parse_bindings({
        {"Br", "Sphi101/(2*r^2) - ((1 + a^2)*SZ111/(2*a^2*r))*" + Fm},
        {"Bphi", "a*Sphi101/(2*r^3)"},
        {"BZ",
         "Sphi101*Z/r^3 - 2*SZ201*r/a"
         " - ((1 + a^2)/(2*a^2*r^2))*(Sr101*" + Fp + " + SZ111*Z*" + Fm + ")"},
        {"s1r", "(Sr101*" + Fp + " - SZ111*Z*" + Fm + ")/a"},
        {"s1phi",
         "2*SZ201*r^2/a + Sphi101*Z/r^2 + Sphi100"
         " - (Sr101*" + Fp + " + SZ111*Z*" + Fm + ")/r"},
        {"s1Z", "(SZ111*r/a)*" + Fm},
        {"s2r", "-a*Sphi101/(2*r) + ((a^2 - 1)*SZ111/(2*a))*" + Fm},
        {"s2phi",
         "-2*SZ201*Z/a - (a^2 - 1)*Sphi101/(4*r^2) + Sphi200 - (SZ111/r)*" + Fm},
        {"s2Z",
         "SZ201*r^2 + SZ200 - ((1 + a^2)/(2*a*r))*(Sr101*" + Fp +
         " + SZ111*Z*" + Fm + ")"},
    });
    auto out = residual_checks("{X1,H} set", l3sq_hx_eqs("s1"), cand);
    auto hx2 = residual_checks("{X2,H} set", circparabolic_hx2_eqs(), cand);
    auto x12 = residual_checks("{X1,X2} set", circparabolic_x1x2_eqs(), cand);
    out.insert(out.end(), hx2.begin(), hx2.end());
    out.insert(out.end(), x12.begin(), x12.end());
    return out;
}

std::vector<CheckResult> fixture_nocoord_leading() {
    Bindings cand = parse_bindings({
        {"Br", "0"},
        {"Bphi", "D(SZ1(r), r)/(2*a)"},
        {"BZ", "-D(Sphi11(r), r)/2 - r*Sphi123 - Sr133/(2*r^2)"},
        {"s1r", "0"},
        {"s1phi", "Sphi11(r) + (r^2 - a)*Sphi123 - Sr133/r"},
        {"s1Z", "SZ1(r)"},
        {"s2r", "0"},
        {"s2phi", "Sphi211c + SZ1(r)/(2*a)"},
        {"s2Z", "(b/a)*SZ1(r) + SZ231 + (Sphi11(r) + r^2*Sphi123 - Sr133/r)/2"},
    });
    auto out = residual_checks("{X1,H} set", nocoord_hx1_eqs(), cand);
    auto hx2 = residual_checks("{X2,H} set", nocoord_hx2_eqs(), cand);
    auto x12 = residual_checks("{X1,X2} set", nocoord_x1x2_eqs(), cand);
    out.insert(out.end(), hx2.begin(), hx2.end());
    out.insert(out.end(), x12.begin(), x12.end());
    return out;
}

std::vector<CheckResult> fixture_s211_ode() {
    Expr resid = substitute(
        parse_expr("(a^2/2)*D(S211(z), z, z) + 2*S211(z)"),
        parse_bindings({{"S211", "alpha1*sin(2*z/a) + alpha2*cos(2*z/a)"}}));
    NormalForm nf = normal_form(resid);
    return {CheckResult{"S211 solves (a^2/2) S'' + 2 S = 0", nf.is_zero(),
                        nf.is_zero() ? "" : nf.to_string()}};
}

std::vector<CheckResult> fixture_second_level_split() {
    // with S22 constant, S212 = -(a/2) S211' and the S211 solution, the
    // second-order {X1,X2} equations 1, 2, 4 reduce exactly to -(2/a) times
    // the printed splitting conditions; equation 3 is solved by the printed
    // s1^3 shape
    Bindings cand = parse_bindings({
        {"S211", "alpha1*sin(2*z/a) + alpha2*cos(2*z/a)"},
        {"S212", "-(a/2)*D(alpha1*sin(2*z/a) + alpha2*cos(2*z/a), z)"},
        {"S22", "S22c"},
        {"s1_3",
         "S13xy(x,y) + ((a*x^2 + a*y^2 - c*y + d*x)*S22c"
         " + (a*y - c)*(alpha1*sin(2*z/a) + alpha2*cos(2*z/a))"
         " - (a*x + d)*(-(a/2)*D(alpha1*sin(2*z/a) + alpha2*cos(2*z/a), z)))/2"},
    });
    auto eqs = elliptic_x1x2_eqs();
    std::vector<std::string> last = {
        "c*(alpha1*cos(2*z/a) - alpha2*sin(2*z/a))",
        "d*(alpha1*sin(2*z/a) + alpha2*cos(2*z/a))",
        "c*(alpha1*sin(2*z/a) + alpha2*cos(2*z/a))"
        " + d*(alpha1*cos(2*z/a) - alpha2*sin(2*z/a)) - a*b*S22c",
    };
    std::vector<CheckResult> out;
    const int which[3] = {0, 1, 3};
    for (int k = 0; k < 3; ++k) {
        Expr resid = substitute(parse_expr(eqs[size_t(which[k])]), cand) +
                     parse_expr("(2/a)") * parse_expr(last[size_t(k)]);
        NormalForm nf = normal_form(resid);
        out.push_back(CheckResult{
            "splitting condition " + std::to_string(k + 1), nf.is_zero(),
            nf.is_zero() ? "" : nf.to_string().substr(0, 200)});
    }
    Expr e3 = substitute(parse_expr(eqs[2]), cand);
    NormalForm nf3 = normal_form(e3);
    out.push_back(CheckResult{"s1^3 shape solves equation 3", nf3.is_zero(),
                              nf3.is_zero() ? "" : nf3.to_string().substr(0, 200)});
    return out;
}

std::vector<CheckResult> fixture_eqF() {
    Bindings cand = parse_bindings(
        {{"F", "(1/6)*S323*r^6 + (1/4)*S322*r^4 + (1/2)*S321c*r^2 + S320"}});
    Expr resid = substitute(
        parse_expr("15*D(F(r), r) - r*(15*D(F(r), r, r)"
                   " + r*(r*D(F(r), r, r, r, r) - 6*D(F(r), r, r, r)))"),
        cand);
    NormalForm nf = normal_form(resid);
    return {CheckResult{"polynomial F solves the fourth-order ODE", nf.is_zero(),
                        nf.is_zero() ? "" : nf.to_string()}};
}

std::vector<CheckResult> fixture_u_relation() {
    std::vector<CheckResult> out;
    Expr trig = parse_expr("(alpha2*sin(delta*z) + alpha1*cos(delta*z))"
                           " + D(alpha2*cos(delta*z) - alpha1*sin(delta*z), z)/delta");
    Expr hyp = parse_expr("(-alpha2*sinh(delta*z) - alpha1*cosh(delta*z))"
                          " + D(alpha1*sinh(delta*z) + alpha2*cosh(delta*z), z)/delta");
    out.push_back({"U2 = -U1'/delta (trigonometric branch)",
                   normal_form(trig).is_zero(), ""});
    out.push_back({"U2 = -U1'/delta (hyperbolic branch)",
                   normal_form(hyp).is_zero(), ""});
    // dU2/dz relation: U1' feeds back with the branch sign
    Expr d2 = parse_expr("D(alpha2*sin(delta*z) + alpha1*cos(delta*z), z)"
                         " - delta*(alpha2*cos(delta*z) - alpha1*sin(delta*z))");
    out.push_back({"U2' = delta U1 (trigonometric branch)",
                   normal_form(d2).is_zero(), ""});
    return out;
}

std::vector<CheckResult> fixture_a0_cd_nonzero() {
    Bindings cand = parse_bindings({
        {"B1", "-S321c/2"},
        {"B2", "-d*S321c/(2*c)"},
        {"B3", "(3*S321c/(2*c))*(x^2 + y^2) + S113/2"},
        {"s1_1",
         "(S321c/(4*c))*(3*y*(x^2 + y^2)^2 + 2*(2*b*y^3 - c*d*x))"
         " + (S113/2)*y*(x^2 + y^2) + S111*y + S112"},
        {"s1_2",
         "-(S321c/(4*c))*(3*x*(x^2 + y^2)^2 + 2*((d^2 - c^2)*x - 2*b*x^3 - c*d*y))"
         " - (S113/2)*x*(x^2 + y^2) + (S113*b - S111)*x + S21const"},
        {"s1_3",
         "(S321c/2)*((y - (d/c)*x)*(x^2 + y^2) + 2*b*(d/c)*x)"
         " + (S113/2)*c*(y - (d/c)*x) + S31const"},
        {"s2_1", "0"},
        {"s2_2", "0"},
        {"s2_3", "S321c*(y - (d/c)*x) + S320"},
        {"S211", "0"},
        {"S212", "0"},
        {"S22", "0"},
    });
    Bindings a0 = cand;
    a0["a"] = Expr::integer(0);
    std::vector<CheckResult> out;
    int n = 0;
    for (auto& pe : printed_elliptic_second_order_x1h()) {
        ++n;
        NormalForm nf = normal_form(substitute(pe.printed, a0));
        out.push_back({"second-order {X1,H} eq " + std::to_string(n), nf.is_zero(),
                       nf.is_zero() ? "" : nf.to_string().substr(0, 200)});
    }
    n = 0;
    for (auto& pe : printed_elliptic_second_order_x2h()) {
        ++n;
        NormalForm nf = normal_form(substitute(pe.printed, a0));
        out.push_back({"second-order {X2,H} eq " + std::to_string(n), nf.is_zero(),
                       nf.is_zero() ? "" : nf.to_string().substr(0, 200)});
    }
    n = 0;
    for (auto& etext : elliptic_x1x2_eqs()) {
        ++n;
        NormalForm nf = normal_form(substitute(parse_expr(etext), a0));
        out.push_back({"second-order {X1,X2} eq " + std::to_string(n), nf.is_zero(),
                       nf.is_zero() ? "" : nf.to_string().substr(0, 200)});
    }
    return out;
}

std::vector<CheckResult> fixture_cd_zero_leading() {
    FieldSystem sys = build_system("CD_ZERO_LEADING");
    VerificationReport rep = verify_system(sys, VerifyMode::Symbolic);
    return rep.checks;
}

struct FixtureDef {
    std::string id;
    std::function<std::vector<CheckResult>()> run;
};

const std::vector<FixtureDef>& fixture_table() {
    static const std::vector<FixtureDef> T = {
        {"l3sq-integral-solution", fixture_l3sq_solution},
        {"spheroidal-leading-order", fixture_spheroidal_leading},
        {"circular-parabolic-leading-order", fixture_circparabolic_leading},
        {"no-coordinate-leading-order", fixture_nocoord_leading},
        {"s211-ode", fixture_s211_ode},
        {"second-level-splitting", fixture_second_level_split},
        {"eqF-polynomial-solution", fixture_eqF},
        {"u-relation", fixture_u_relation},
        {"a0-cd-nonzero-leading-order", fixture_a0_cd_nonzero},
        {"cd-zero-leading-order", fixture_cd_zero_leading},
    };
    return T;
}

}  // namespace

bool FixtureReport::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string FixtureReport::to_text() const {
    std::ostringstream os;
    os << "fixture " << id << "\n";
    for (auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (auto& f : fixture_table()) ids.push_back(f.id);
    return ids;
}

FixtureReport check_fixture(const std::string& id) {
    for (auto& f : fixture_table()) {
        if (f.id == id) {
            FixtureReport rep;
            rep.id = id;
            rep.checks = f.run();
            return rep;
        }
    }
    throw ExprError("unknown fixture: " + id);
}

std::vector<FixtureReport> check_all_fixtures() {
    std::vector<FixtureReport> out;
    for (auto& f : fixture_table()) out.push_back(check_fixture(f.id));
    return out;
}

}  // namespace ifield
