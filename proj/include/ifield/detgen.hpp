#pragma once

#include "ifield/bracket.hpp"

namespace ifield {

// leading-order classes of commuting quadratic pairs handled by the toolkit
enum class LeadingClass {
    EllipticCylindrical,    // X1 = l3^2 + a l3 p3 + b p1^2 + c p1 p3 + d p2 p3, X2 = p3^2
    OblateProlateSpheroidal,  // X1 = l^2 + a l3 p3 + b p3^2, X2 = l3^2
    CircularParabolic,      // X1 = l3^2, X2 = l1 p2 - l2 p1 + a l3 p3
    NoCoordinate,           // X1 = l3^2 + a p3^2, X2 = l3 p3 + b p3^2
};

const char* leading_class_name(LeadingClass c);
LeadingClass leading_class_from_name(const std::string& name);
Chart leading_class_chart(LeadingClass c);

struct ClassEquations {
    LeadingClass cls;
    DetEqSet x1h;   // {X1, H}
    DetEqSet x2h;   // {X2, H}
    DetEqSet x1x2;  // {X1, X2}
};

// generate the 30 determining equations of a class with opaque field and
// integral functions (B components, s_k^j, m_k, W)
ClassEquations generate_determining_equations(LeadingClass cls);

// printed second-order equations of the elliptic cylindrical class, with the
// per-equation orientation relating them to the generated residuals
struct PrintedDetEq {
    std::string anchor;  // which printed equation
    MomIdx mon;
    int orientation;     // generated == orientation * printed
    Expr printed;
};

std::vector<PrintedDetEq> printed_elliptic_second_order_x1h();
std::vector<PrintedDetEq> printed_elliptic_second_order_x2h();

// true when every generated coefficient equals orientation * printed
bool matches_printed(const DetEqSet& gen, const std::vector<PrintedDetEq>& printed,
                     std::string* diagnostics = nullptr);

}  // namespace ifield
