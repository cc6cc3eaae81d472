#include "ifield/jsonio.hpp"

#include <json.hpp>

namespace ifield {

using nlohmann::json;

namespace {

std::string expr_str(const Expr& e) { return print_expr(e); }

}  // namespace

std::string system_to_json(const FieldSystem& sys) {
    json j;
    j["schema"] = "ifield-system/1";
    j["id"] = sys.id;
    j["anchor"] = sys.anchor;
    j["chart"] = sys.chart == Chart::Cartesian ? "cartesian" : "cylindrical";
    json params = json::object();
    for (auto& p : sys.params) {
        if (p.value) {
            params[p.name] = p.value->get_str();
        } else {
            params[p.name] = "symbolic";
        }
    }
    j["params"] = params;
    j["B"] = {expr_str(sys.B.comp[0]), expr_str(sys.B.comp[1]), expr_str(sys.B.comp[2])};
    j["W"] = sys.has_W ? expr_str(sys.W) : "";
    if (sys.gauge) {
        j["A"] = {expr_str(sys.gauge->comp[0]), expr_str(sys.gauge->comp[1]),
                  expr_str(sys.gauge->comp[2])};
    }
    json ints = json::array();
    for (auto& X : sys.integrals) {
        json ji;
        json alpha = json::array(), beta = json::array(), gamma = json::array();
        for (auto& [ij, e] : X.alpha)
            alpha.push_back({ij.first, ij.second, expr_str(e)});
        for (auto& [ij, e] : X.beta)
            beta.push_back({ij.first, ij.second, expr_str(e)});
        for (auto& [ij, e] : X.gamma)
            gamma.push_back({ij.first, ij.second, expr_str(e)});
        ji["alpha"] = alpha;
        ji["beta"] = beta;
        ji["gamma"] = gamma;
        ji["s"] = {expr_str(X.s[0]), expr_str(X.s[1]), expr_str(X.s[2])};
        ji["m"] = expr_str(X.m);
        ints.push_back(ji);
    }
    j["integrals"] = ints;
    json claims = json::array();
    for (auto& c : sys.claims) claims.push_back(c.name);
    j["claims"] = claims;
    json errata = json::array();
    for (auto& e : sys.errata)
        errata.push_back({{"slot", e.slot},
                          {"printed", e.printed},
                          {"corrected", e.corrected},
                          {"note", e.note}});
    j["errata"] = errata;
    if (sys.exclusion_rho_min > 0) j["exclusion_rho_min"] = sys.exclusion_rho_min;
    return j.dump(2);
}

std::string report_to_json(const VerificationReport& rep) {
    json j;
    j["system"] = rep.system_id;
    j["mode"] = rep.mode == VerifyMode::Symbolic ? "symbolic" : "numeric";
    j["pass"] = rep.all_pass();
    json checks = json::array();
    for (auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    return j.dump(2);
}

std::string fixture_report_to_json(const FixtureReport& rep) {
    json j;
    j["fixture"] = rep.id;
    j["pass"] = rep.all_pass();
    json checks = json::array();
    for (auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    return j.dump(2);
}

std::string deteqset_to_json(const DetEqSet& set) {
    json j;
    j["provenance"] = set.provenance;
    json eqs = json::array();
    for (auto& e : set.eqs)
        eqs.push_back({{"monomial", e.label},
                       {"residual", print_expr(to_expr(e.residual))}});
    j["equations"] = eqs;
    return j.dump(2);
}

}  // namespace ifield
