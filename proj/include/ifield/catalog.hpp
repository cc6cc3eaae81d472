#pragma once

#include <optional>

#include "ifield/bracket.hpp"

namespace ifield {

enum class ClaimKind {
    BracketZero,      // {lhs, rhs} = 0 (index -1 means H)
    DAEqualsB,        // exterior_derivative(gauge) == B
    DivBZero,         // closedness of B
    FreeMotionLimit,  // parameter limit kills B and W
    CylindricalReductionAtB0D0,  // X1 leading structure at b=0, d=0
    X2GaugeCollapse,  // X2 == p3^2 in the documented gauge
    URelation,        // U2 = -U1'/delta
    WZIndependent,    // B1=B2=0, B3 = f(x^2+y^2), W z-free
    LeadingDetEqsZero,  // all second-order determining residuals vanish
    ErratumResidual,  // the printed variant does NOT verify; delta is pinned
};

struct Claim {
    ClaimKind kind;
    std::string name;
    int lhs = -1, rhs = -1;  // integral indices for BracketZero (-1 = H)
    std::map<std::string, std::string> subs;  // limits: parameter -> value expr
    int erratum_index = -1;
};

// a pinned discrepancy between the printed source and the verified form
struct Erratum {
    std::string slot;       // e.g. "X1.s3", "X2.m", "B.Z"
    std::string printed;    // printed expression (or printed term)
    std::string corrected;  // corrected expression actually catalogued
    std::string note;
};

struct ParamInfo {
    std::string name;
    std::string constraint;  // human-readable constraint
    std::optional<Rat> value;  // bound in numeric mode
};

struct FieldSystem {
    std::string id;
    std::string anchor;  // where the system comes from, for `list`
    Chart chart = Chart::Cartesian;
    std::vector<ParamInfo> params;
    bool symbolic = true;  // any unbound parameters remain

    TwoForm B;
    Expr W;
    bool has_W = true;
    std::optional<OneForm> gauge;
    std::vector<IntegralSpec> integrals;  // [0]=X1, [1]=X2
    std::vector<Claim> claims;
    std::vector<Erratum> errata;
    double exclusion_rho_min = 0.0;  // cylinder around the z axis

    const Rat* param_value(const std::string& name) const;
};

using ParamMap = std::map<std::string, Rat>;

std::vector<std::string> catalog_ids();
const char* catalog_anchor(const std::string& id);

// construct a catalogued system; parameters absent from `params` stay
// symbolic. Throws ExprError on constraint violations.
FieldSystem build_system(const std::string& id, const ParamMap& params = {});

// --- verification -----------------------------------------------------------

enum class VerifyMode { Symbolic, Numeric };

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string system_id;
    VerifyMode mode = VerifyMode::Symbolic;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_text() const;
};

struct VerifyOptions {
    uint64_t seed = 20260810;
    int points = 1000;
    double h = 1e-5;         // oracle step
    double tol = 1e-9;       // numeric residual tolerance (relative)
    bool with_oracle = true; // cross-check symbolic brackets numerically
};

VerificationReport verify_system(const FieldSystem& sys, VerifyMode mode,
                                 const VerifyOptions& opts = {});

// covariant observables of the system (index -1 = H)
Observable system_observable(const FieldSystem& sys, int index);

}  // namespace ifield
