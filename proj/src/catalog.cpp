#include "ifield/catalog.hpp"

#include <sstream>

#include "ifield/catalog_data.hpp"

namespace ifield {

const Rat* FieldSystem::param_value(const std::string& name) const {
    for (auto& p : params)
        if (p.name == name && p.value) return &*p.value;
    return nullptr;
}

std::vector<std::string> catalog_ids() {
    return {"ELLIPTIC_A_NONZERO", "ELLIPTIC_A_ZERO", "LIMIT_STANDARD",
            "CLASS_III", "SPECIAL_FIRST_ORDER", "CD_ZERO_LEADING"};
}

const char* catalog_anchor(const std::string& id) {
    if (id == "ELLIPTIC_A_NONZERO")
        return "new integrable system, elliptic cylindrical branch with a != 0";
    if (id == "ELLIPTIC_A_ZERO")
        return "new integrable system, a = 0, d = 0 branch (periodic for b < 0)";
    if (id == "LIMIT_STANDARD")
        return "standard elliptic cylindrical limit c,d -> 0, a beta1 -> beta1t";
    if (id == "CLASS_III")
        return "known system: constant B3 with W = w0/rho^2 - bphi^2 rho^2/8";
    if (id == "SPECIAL_FIRST_ORDER")
        return "special case with two commuting first-order integrals";
    if (id == "CD_ZERO_LEADING")
        return "c = d = 0 leading-order solution (cylindrical chart)";
    throw ExprError("unknown system: " + id);
}

FieldSystem build_system(const std::string& id, const ParamMap& params) {
    if (id == "ELLIPTIC_A_NONZERO") return data::elliptic_a_nonzero(params);
    if (id == "ELLIPTIC_A_ZERO") return data::elliptic_a_zero(params);
    if (id == "LIMIT_STANDARD") return data::limit_standard(params);
    if (id == "CLASS_III") return data::class_iii(params);
    if (id == "SPECIAL_FIRST_ORDER") return data::special_first_order(params);
    if (id == "CD_ZERO_LEADING") return data::cd_zero_leading(params);
    throw ExprError("unknown system: " + id);
}

Observable system_observable(const FieldSystem& sys, int index) {
    if (index < 0) return hamiltonian_observable(sys.chart, sys.has_W ? sys.W : Expr());
    return build_observable(sys.integrals.at(size_t(index)));
}

bool VerificationReport::all_pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "system " << system_id << " ("
       << (mode == VerifyMode::Symbolic ? "symbolic" : "numeric") << ")\n";
    for (auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    os << (all_pass() ? "all claims pass" : "CLAIMS FAILED") << "\n";
    return os.str();
}

}  // namespace ifield
