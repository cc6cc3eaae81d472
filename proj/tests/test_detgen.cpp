#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ifield/detgen.hpp"

using namespace ifield;

TEST_CASE("elliptic cylindrical second-order set matches the printed equations") {
    ClassEquations eqs = generate_determining_equations(LeadingClass::EllipticCylindrical);
    std::string diag;
    CHECK(matches_printed(eqs.x1h, printed_elliptic_second_order_x1h(), &diag));
    INFO(diag);
    CHECK(matches_printed(eqs.x2h, printed_elliptic_second_order_x2h(), &diag));
    INFO(diag);
}

TEST_CASE("lower-order equations have the known bracket structure") {
    ClassEquations eqs = generate_determining_equations(LeadingClass::EllipticCylindrical);
    // p1 coefficient of {X2,H}: -B2 s2_3 + B3 s2_2 + d m2/dx
    Expr expect = parse_expr(
        "-B2(x,y,z)*s2_3(x,y,z) + B3(x,y,z)*s2_2(x,y,z) + D(m2(x,y,z), x)");
    const NormalForm* got = nullptr;
    for (auto& e : eqs.x2h.eqs)
        if (e.mon == MomIdx{{1, 0, 0}}) got = &e.residual;
    REQUIRE(got != nullptr);
    CHECK((*got - normal_form(expect)).is_zero());
    // zero-order: -s2 . grad W
    Expr zexpect = parse_expr(
        "-(s2_1(x,y,z)*D(W(x,y,z), x) + s2_2(x,y,z)*D(W(x,y,z), y) + "
        "s2_3(x,y,z)*D(W(x,y,z), z))");
    const NormalForm* gz = nullptr;
    for (auto& e : eqs.x2h.eqs)
        if (e.mon == MomIdx{{0, 0, 0}}) gz = &e.residual;
    REQUIRE(gz != nullptr);
    CHECK((*gz - normal_form(zexpect)).is_zero());
}

TEST_CASE("all four classes generate 30 equations with degree <= 2") {
    for (LeadingClass cls :
         {LeadingClass::EllipticCylindrical, LeadingClass::OblateProlateSpheroidal,
          LeadingClass::CircularParabolic, LeadingClass::NoCoordinate}) {
        ClassEquations eqs = generate_determining_equations(cls);
        CHECK(eqs.x1h.eqs.size() == 10);
        CHECK(eqs.x2h.eqs.size() == 10);
        CHECK(eqs.x1x2.eqs.size() == 10);
        // the second-order parts are nontrivial for every class
        bool nontrivial = false;
        for (auto& e : eqs.x1h.eqs)
            if (e.mon.total() == 2 && !e.residual.is_zero()) nontrivial = true;
        CHECK(nontrivial);
        CHECK(eqs.x1h.to_text().find("p1^2") != std::string::npos);
    }
}

TEST_CASE("class name round trip") {
    for (LeadingClass cls :
         {LeadingClass::EllipticCylindrical, LeadingClass::OblateProlateSpheroidal,
          LeadingClass::CircularParabolic, LeadingClass::NoCoordinate}) {
        CHECK(leading_class_from_name(leading_class_name(cls)) == cls);
    }
    CHECK_THROWS_AS(leading_class_from_name("spherical"), ExprError);
}
