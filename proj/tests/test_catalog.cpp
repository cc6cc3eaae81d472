#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifield/catalog.hpp"

using namespace ifield;

TEST_CASE("ELLIPTIC_A_NONZERO verifies symbolically") {
    FieldSystem sys = build_system("ELLIPTIC_A_NONZERO");
    CHECK(sys.symbolic);
    VerificationReport rep = verify_system(sys, VerifyMode::Symbolic);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
}

TEST_CASE("ELLIPTIC_A_ZERO verifies symbolically on both branches") {
    for (int eps : {-1, 1}) {
        FieldSystem sys = build_system("ELLIPTIC_A_ZERO", {{"eps", Rat(eps)}});
        VerificationReport rep = verify_system(sys, VerifyMode::Symbolic);
        INFO("eps = ", eps, "\n", rep.to_text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("LIMIT_STANDARD, CLASS_III, SPECIAL_FIRST_ORDER, CD_ZERO_LEADING") {
    for (const char* id :
         {"LIMIT_STANDARD", "CLASS_III", "SPECIAL_FIRST_ORDER", "CD_ZERO_LEADING"}) {
        FieldSystem sys = build_system(id);
        VerificationReport rep = verify_system(sys, VerifyMode::Symbolic);
        INFO(rep.to_text());
        CHECK(rep.all_pass());
    }
}

TEST_CASE("constraint violations are rejected") {
    CHECK_THROWS_AS(build_system("ELLIPTIC_A_NONZERO", {{"a", Rat(0)}}), ExprError);
    CHECK_THROWS_AS(build_system("ELLIPTIC_A_ZERO"), ExprError);  // eps required
    CHECK_THROWS_AS(build_system("ELLIPTIC_A_ZERO", {{"eps", Rat(2)}}), ExprError);
    // eps alpha2^2 - alpha1^2 = 0 rejected (paper-level gap, m1 denominator)
    CHECK_THROWS_AS(build_system("ELLIPTIC_A_ZERO", {{"eps", Rat(1)},
                                                     {"alpha1", Rat(1)},
                                                     {"alpha2", Rat(1)}}),
                    ExprError);
    CHECK_THROWS_AS(build_system("NO_SUCH_ID"), ExprError);
}

TEST_CASE("fig parameter binding populates B3 as printed") {
    FieldSystem sys = build_system(
        "ELLIPTIC_A_ZERO",
        {{"eps", Rat(-1)}, {"delta", Rat(1)}, {"c", Rat(2)}, {"alpha1", Rat(1)},
         {"alpha2", Rat(1)}, {"beta1", Rat(-1, 5)}, {"beta2", Rat(-1, 7)},
         {"omega1", Rat(-1)}, {"omega2", Rat(-1)}});
    CHECK(!sys.symbolic);
    // B3 = 3*beta2*(x^2+y^2) + eps*U2 - beta1 at the printed parameter values
    Expr expect = parse_expr(
        "-(3/7)*(x^2 + y^2) - (sin(z) + cos(z)) + 1/5");
    CHECK(normal_form(sys.B.comp[2] - expect).is_zero());
}

TEST_CASE("ELLIPTIC_A_ZERO numeric verification at fig params") {
    FieldSystem sys = build_system(
        "ELLIPTIC_A_ZERO",
        {{"eps", Rat(-1)}, {"delta", Rat(1)}, {"c", Rat(2)}, {"alpha1", Rat(1)},
         {"alpha2", Rat(1)}, {"beta1", Rat(-1, 5)}, {"beta2", Rat(-1, 7)},
         {"omega1", Rat(-1)}, {"omega2", Rat(-1)}});
    VerifyOptions opts;
    opts.points = 200;
    VerificationReport rep = verify_system(sys, VerifyMode::Numeric, opts);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
}

TEST_CASE("LIMIT_STANDARD integrals match the frozen limit polynomials") {
    FieldSystem sys = build_system("LIMIT_STANDARD");
    // frozen from the independent limit computation
    Expr s11 = parse_expr(
        "beta1t*y*(x^2 + y^2) - 2*b*beta2*y^3 - (3*beta2/2)*y*(x^2 + y^2)^2"
        " + omega2 + 2*omega3*y");
    Expr s12 = parse_expr(
        "2*b*beta1t*x - 2*b*beta2*x^3 - beta1t*x*(x^2 + y^2)"
        " + (3*beta2/2)*x*(x^2 + y^2)^2 - omega1 - 2*omega3*x");
    CHECK(normal_form(sys.integrals[0].s[0] - s11).is_zero());
    CHECK(normal_form(sys.integrals[0].s[1] - s12).is_zero());
    CHECK(normal_form(sys.integrals[0].s[2]).is_zero());
    CHECK(normal_form(sys.integrals[1].s[2]).is_zero());
    CHECK(normal_form(sys.integrals[1].m).is_zero());
    // m1 spot checks: the x^2 coefficient block
    Expr m1 = sys.integrals[0].m;
    Expr probe = substitute(m1, {{"x", Expr::integer(1)},
                                 {"y", Expr::integer(0)},
                                 {"omega1", Expr::integer(0)},
                                 {"omega2", Expr::integer(0)},
                                 {"omega3", Expr::integer(0)}});
    Expr expect = parse_expr(
        "-2*b^2*beta1t*beta2 + b^2*beta2^2 - b*beta1t^2 + (5/2)*b*beta1t*beta2"
        " - (3/2)*b*beta2^2 + beta1t^2/4 - (3/4)*beta1t*beta2 + (9/16)*beta2^2");
    CHECK(normal_form(probe - expect).is_zero());
}

TEST_CASE("catalog listing") {
    auto ids = catalog_ids();
    CHECK(ids.size() == 6);
    for (auto& id : ids) CHECK(catalog_anchor(id) != nullptr);
}
