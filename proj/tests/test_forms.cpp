#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ifield/forms.hpp"

using namespace ifield;

namespace {

// seeded random polynomial in x, y, z of degree <= deg
Expr random_poly(std::mt19937_64& rng, int deg) {
    const char* coords[3] = {"x", "y", "z"};
    Expr sum;
    int terms = 2 + int(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        long num = long(rng() % 9) - 4;
        if (num == 0) num = 1;
        Expr term = Expr::number(Rat(num, long(1 + rng() % 3)));
        int d = int(rng() % unsigned(deg + 1));
        for (int k = 0; k < d; ++k) term = term * Expr::symbol(coords[rng() % 3]);
        sum = sum + term;
    }
    return sum;
}

}  // namespace

TEST_CASE("constant field symmetric gauge") {
    OneForm A = make_one_form(Chart::Cartesian, "-B0*y/2", "B0*x/2", "0");
    TwoForm B = exterior_derivative(A);
    CHECK(normal_form(B.comp[0]).is_zero());
    CHECK(normal_form(B.comp[1]).is_zero());
    CHECK(normal_form(B.comp[2] - parse_expr("B0")).is_zero());

    TwoForm Bc = make_two_form(Chart::Cartesian, "0", "0", "B0");
    OneForm Ar = poincare_gauge(Bc);
    CHECK(one_forms_equal(Ar, A));
}

TEST_CASE("d of d is zero") {
    OneForm A = make_one_form(Chart::Cartesian, "y*z", "x*z", "x*y");  // d(xyz)
    TwoForm B = exterior_derivative(A);
    for (auto& c : B.comp) CHECK(normal_form(c).is_zero());

    std::mt19937_64 rng(73);
    for (int i = 0; i < 20; ++i) {
        Expr chi = random_poly(rng, 3);
        OneForm zero{Chart::Cartesian, {Expr(), Expr(), Expr()}};
        TwoForm dd = exterior_derivative(gauge_shift(zero, chi));
        for (auto& c : dd.comp) CHECK(normal_form(c).is_zero());
    }
}

TEST_CASE("divergence") {
    TwoForm bad = make_two_form(Chart::Cartesian, "x", "0", "0");
    CHECK(normal_form(divergence(bad) - Expr::integer(1)).is_zero());
    CHECK_THROWS_AS(poincare_gauge(bad), ExprError);

    std::mt19937_64 rng(1234);
    for (int i = 0; i < 20; ++i) {
        OneForm A{Chart::Cartesian,
                  {random_poly(rng, 3), random_poly(rng, 3), random_poly(rng, 3)}};
        CHECK(normal_form(divergence(exterior_derivative(A))).is_zero());
    }
}

TEST_CASE("poincare gauge of zero field") {
    TwoForm B = make_two_form(Chart::Cartesian, "0", "0", "0");
    OneForm A = poincare_gauge(B);
    for (auto& c : A.comp) CHECK(normal_form(c).is_zero());
}

TEST_CASE("poincare round trip, polynomial fields") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) {
        OneForm A{Chart::Cartesian,
                  {random_poly(rng, 3), random_poly(rng, 3), random_poly(rng, 3)}};
        TwoForm B = exterior_derivative(A);
        OneForm Ar = poincare_gauge(B);
        CHECK(two_forms_equal(exterior_derivative(Ar), B));
    }
}

TEST_CASE("poincare round trip with z atoms") {
    // field with the shape of the a=0 catalog system: polynomial prefactors
    // times sin/cos(delta z)
    TwoForm B = make_two_form(
        Chart::Cartesian,
        "delta*(2*x*(alpha2*cos(delta*z) - alpha1*sin(delta*z)) + "
        "c*delta*(alpha2*sin(delta*z) + alpha1*cos(delta*z)))/4 - c*beta2",
        "delta*y*(alpha2*cos(delta*z) - alpha1*sin(delta*z))/2",
        "3*beta2*(x^2 + y^2) - (alpha2*sin(delta*z) + alpha1*cos(delta*z)) - beta1");
    CHECK(normal_form(divergence(B)).is_zero());
    OneForm A = poincare_gauge(B);
    CHECK(two_forms_equal(exterior_derivative(A), B));
}

TEST_CASE("poincare rejects unsupported shapes") {
    TwoForm B = make_two_form(Chart::Cartesian, "0", "0", "sin(delta*z)^2");
    CHECK_THROWS_AS(poincare_gauge(B), ExprError);
    TwoForm Bs = make_two_form(Chart::Cartesian,
                               "beta*(y - c/a)/sqrt(x^2 + (y - c/a)^2)^3",
                               "-beta*x/sqrt(x^2 + (y - c/a)^2)^3", "0");
    CHECK(normal_form(divergence(Bs)).is_zero());
    CHECK_THROWS_AS(poincare_gauge(Bs), ExprError);
}

TEST_CASE("gauge shift") {
    OneForm zero{Chart::Cartesian, {Expr(), Expr(), Expr()}};
    OneForm A = gauge_shift(zero, parse_expr("x*y*z"));
    CHECK(one_forms_equal(A, make_one_form(Chart::Cartesian, "y*z", "x*z", "x*y")));

    OneForm A0 = make_one_form(Chart::Cartesian, "0", "a*beta1*x - beta2*x^3 - 3*beta2*x*y^2",
                               "-beta2*(a*x^2/2 + d*x) + beta2*(c*y - a*y^2/2)");
    TwoForm B0 = exterior_derivative(A0);
    std::mt19937_64 rng(5);
    OneForm A1 = gauge_shift(A0, random_poly(rng, 3));
    CHECK(two_forms_equal(exterior_derivative(A1), B0));
}
