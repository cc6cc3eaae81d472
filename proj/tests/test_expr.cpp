#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ifield/parser.hpp"

using namespace ifield;

static bool nf_zero(const std::string& s) {
    return normal_form(parse_expr(s)).is_zero();
}

TEST_CASE("parse basics") {
    CHECK(normal_form(parse_expr("0")).is_zero());
    CHECK(nf_zero("x - x"));
    CHECK(nf_zero("beta2*(c - a*y) - (beta2*c - beta2*a*y)"));
    CHECK(nf_zero("(x+y)^2 - x^2 - 2*x*y - y^2"));
    CHECK_THROWS_AS(parse_expr("x +"), ParseError);
    CHECK_THROWS_AS(parse_expr("sin(x*y)"), ParseError);
}

TEST_CASE("parse error carries byte offset") {
    try {
        parse_expr("x + (y");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("pythagorean identities") {
    CHECK(nf_zero("sin(d*z)^2 + cos(d*z)^2 - 1"));
    CHECK(nf_zero("cosh(delta*z)^2 - sinh(delta*z)^2 - 1"));
    CHECK(nf_zero("sin(2*z/a) - 2*sin(z/a)*cos(z/a)"));
    CHECK(nf_zero("cos(2*phi) - cos(phi)^2 + sin(phi)^2"));
    CHECK(nf_zero("sin(2*Z/a - phi) - sin(2*Z/a)*cos(phi) + cos(2*Z/a)*sin(phi)"));
    CHECK(nf_zero("exp(phi/a)*exp(-phi/a) - 1"));
    CHECK(nf_zero("sqrt(x^2 + y^2)^2 - x^2 - y^2"));
}

TEST_CASE("differentiate") {
    // d/dz sin(delta z) = delta cos(delta z)
    Expr e = differentiate(parse_expr("sin(delta*z)"), "z");
    CHECK(normal_form(e - parse_expr("delta*cos(delta*z)")).is_zero());
    // no x dependence
    CHECK(normal_form(differentiate(parse_expr("beta2*(c - a*y)"), "x")).is_zero());
    // product rule spot check
    Expr f = parse_expr("x^2*sin(delta*z)");
    Expr g = parse_expr("cos(delta*z)*y");
    Expr lhs = differentiate(f * g, "z");
    Expr rhs = differentiate(f, "z") * g + f * differentiate(g, "z");
    CHECK(normal_form(lhs - rhs).is_zero());
    // quotient rule
    Expr q = parse_expr("x/(x^2 + y^2)");
    Expr dq = differentiate(q, "x");
    CHECK(normal_form(dq - parse_expr("(y^2 - x^2)/(x^2 + y^2)^2")).is_zero());
    // sqrt chain rule: d/dx 1/rho = -x/rho^3
    Expr rho_inv = parse_expr("1/sqrt(x^2 + y^2)");
    CHECK(normal_form(differentiate(rho_inv, "x") +
                      parse_expr("x/sqrt(x^2 + y^2)^3"))
              .is_zero());
}

TEST_CASE("substitute") {
    Expr e = parse_expr("beta1*x^2 + beta2*y");
    Expr s = substitute(e, {{"beta1", Expr::integer(0)}, {"beta2", Expr::integer(0)}});
    CHECK(normal_form(s).is_zero());
    // x -> pi q1 style rescale (q1 as a parameter)
    Expr p = substitute(parse_expr("x^2"), {{"x", parse_expr("3*q1")}});
    CHECK(normal_form(p - parse_expr("9*q1^2")).is_zero());
    // substitution creating a nonlinear atom argument is rejected
    Expr bad = substitute(parse_expr("sin(d*z)"), {{"d", parse_expr("z")}});
    CHECK_THROWS_AS(normal_form(bad), ExprError);
}

TEST_CASE("jet symbols") {
    Expr e = parse_expr("D(S21(phi), phi, phi) + S21(phi)");
    CHECK(!normal_form(e).is_zero());
    Expr sub = substitute(e, {{"S21", parse_expr("sin(phi)")}});
    CHECK(normal_form(sub).is_zero());
    // jets cannot be evaluated numerically
    EvalEnv env;
    env.set("phi", 0.3);
    CHECK_THROWS_AS(eval_numeric(parse_expr("S21(phi)"), env), EvalError);
}

TEST_CASE("eval numeric") {
    EvalEnv env;
    env.set("beta2", -1.0 / 7.0);
    env.set("c", 2.0);
    env.set("a", 0.0);
    env.set("y", 1.0);
    double v = eval_numeric(parse_expr("beta2*(c - a*y)"), env);
    CHECK(v == doctest::Approx(-2.0 / 7.0).epsilon(1e-15));

    EvalEnv env2;
    env2.set("alpha1", 1.0);
    env2.set("alpha2", 1.0);
    env2.set("delta", 1.0);
    env2.set("z", 0.0);
    // U1(0) for the eps=-1 branch
    double u1 = eval_numeric(parse_expr("alpha2*cos(delta*z) - alpha1*sin(delta*z)"), env2);
    CHECK(u1 == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(eval_numeric(Expr(), env2) == 0.0);

    EvalEnv env3;
    env3.set("x", 1e-9);
    CHECK_THROWS_AS(eval_numeric(parse_expr("1/x"), env3), EvalError);
    // unbound symbol
    EvalEnv env4;
    CHECK_THROWS_AS(eval_numeric(parse_expr("q7 + 1"), env4), EvalError);
}

TEST_CASE("print round trip through normal form") {
    std::vector<std::string> samples = {
        "beta2*(c - a*y)",
        "sin(d*z)^2 + cos(d*z)^2",
        "x/(x^2 + y^2) - 3/4",
        "sqrt(x^2 + (y - c/a)^2)^3",
        "exp(2*phi/a) + exp(-2*phi/a)",
        "D(S2phi(r,Z), Z) + S2phi(r,Z)",
    };
    for (auto& s : samples) {
        Expr e = parse_expr(s);
        NormalForm nf = normal_form(e);
        Expr printed = to_expr(nf);
        Expr reparsed = parse_expr(print_expr(printed));
        CHECK(normal_form(reparsed - e).is_zero());
    }
}

TEST_CASE("normal form invariant under re-association, eval agreement") {
    std::mt19937_64 rng(20260810);
    auto rnd = [&](double lo, double hi) {
        return lo + (hi - lo) * double(rng() >> 11) * 0x1.0p-53;
    };
    Expr e = parse_expr(
        "(x + y)*(x - y)*sin(delta*z)^2 + (x^2 - y^2)*cos(delta*z)^2 - x^2 + y^2");
    CHECK(normal_form(e).is_zero());
    Expr f = parse_expr("beta1*(x + (y + z))^3 - beta1*((x + y) + z)^3");
    CHECK(normal_form(f).is_zero());

    Expr g = parse_expr("(3*x^2*y - z/4)*cos(delta*z) + y^4/(1 + x^2)");
    NormalForm nfg = normal_form(g);
    Expr gg = to_expr(nfg);
    for (int i = 0; i < 200; ++i) {
        EvalEnv env;
        env.set("x", rnd(-2, 2));
        env.set("y", rnd(-2, 2));
        env.set("z", rnd(-2, 2));
        env.set("delta", rnd(0.5, 2));
        double v1 = eval_numeric(g, env);
        double v2 = eval_numeric(gg, env);
        double scale = std::max(1.0, std::fabs(v1));
        CHECK(std::fabs(v1 - v2) / scale < 1e-12);
    }
}
