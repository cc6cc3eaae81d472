#include "ifield/symbols.hpp"

#include <mutex>

#include "ifield/poly.hpp"

namespace ifield {

namespace {
std::recursive_mutex& registry_mutex() {
    static std::recursive_mutex m;
    return m;
}
}  // namespace

const char* atom_fn_name(AtomFn fn) {
    switch (fn) {
        case AtomFn::Sin: return "sin";
        case AtomFn::Cos: return "cos";
        case AtomFn::Sinh: return "sinh";
        case AtomFn::Cosh: return "cosh";
        case AtomFn::Exp: return "exp";
    }
    return "?";
}

bool ParamMono::operator<(const ParamMono& o) const {
    if (pows != o.pows) return pows < o.pows;
    return cmp(coeff, o.coeff) < 0;
}

ParamMono ParamMono::abs() const {
    ParamMono r = *this;
    if (r.coeff < 0) r.coeff = -r.coeff;
    return r;
}

Symbols::Symbols() = default;

Symbols& Symbols::instance() {
    static Symbols s;
    return s;
}

int Symbols::param(const std::string& name) {
    std::lock_guard lk(registry_mutex());
    auto it = params_.find(name);
    if (it != params_.end()) return it->second;
    GenInfo gi;
    gi.kind = GenKind::Param;
    gi.name = name;
    gens_.push_back(gi);
    int id = int(gens_.size()) - 1;
    params_[name] = id;
    return id;
}

std::optional<int> Symbols::find_param(const std::string& name) const {
    std::lock_guard lk(registry_mutex());
    auto it = params_.find(name);
    if (it == params_.end()) return std::nullopt;
    return it->second;
}

int Symbols::coord(Chart chart, int index) {
    std::lock_guard lk(registry_mutex());
    auto key = std::make_pair(int(chart), index);
    auto it = coords_.find(key);
    if (it != coords_.end()) return it->second;
    GenInfo gi;
    gi.kind = GenKind::Coord;
    gi.chart = chart;
    gi.coord_index = index;
    gi.name = chart_coord_name(chart, index);
    gens_.push_back(gi);
    int id = int(gens_.size()) - 1;
    coords_[key] = id;
    return id;
}

int Symbols::coord_by_name(const std::string& name) {
    static const std::map<std::string, std::pair<Chart, int>> table = {
        {"x", {Chart::Cartesian, 0}},  {"y", {Chart::Cartesian, 1}},
        {"z", {Chart::Cartesian, 2}},  {"r", {Chart::Cylindrical, 0}},
        {"phi", {Chart::Cylindrical, 1}}, {"Z", {Chart::Cylindrical, 2}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw ExprError("not a coordinate name: " + name);
    return coord(it->second.first, it->second.second);
}

bool Symbols::is_coordinate_name(const std::string& name) const {
    return name == "x" || name == "y" || name == "z" || name == "r" ||
           name == "phi" || name == "Z";
}

int Symbols::atom(AtomFn fn, int coord_gen, const ParamMono& mu) {
    std::lock_guard lk(registry_mutex());
    auto key = std::make_tuple(int(fn), coord_gen, mu);
    auto it = atoms_.find(key);
    if (it != atoms_.end()) return it->second;
    GenInfo gi;
    gi.kind = GenKind::Atom;
    gi.fn = fn;
    gi.coord_gen = coord_gen;
    gi.mu = mu;
    gens_.push_back(gi);
    int id = int(gens_.size()) - 1;
    atoms_[key] = id;
    // fixed reduction orientation: sin^2 -> 1 - cos^2, sinh^2 -> cosh^2 - 1
    if (fn == AtomFn::Sin) {
        int cosg = atom(AtomFn::Cos, coord_gen, mu);
        square_rules_[id] =
            store_poly(Poly::constant(1) - Poly::gen(cosg, 2));
    } else if (fn == AtomFn::Sinh) {
        int coshg = atom(AtomFn::Cosh, coord_gen, mu);
        square_rules_[id] =
            store_poly(Poly::gen(coshg, 2) - Poly::constant(1));
    }
    return id;
}

int Symbols::atom_partner(int atom_gen) {
    std::lock_guard lk(registry_mutex());
    const GenInfo gi = info(atom_gen);
    if (gi.kind != GenKind::Atom) throw ExprError("atom_partner of non-atom");
    AtomFn partner = AtomFn::Sin;
    switch (gi.fn) {
        case AtomFn::Sin: partner = AtomFn::Cos; break;
        case AtomFn::Cos: partner = AtomFn::Sin; break;
        case AtomFn::Sinh: partner = AtomFn::Cosh; break;
        case AtomFn::Cosh: partner = AtomFn::Sinh; break;
        case AtomFn::Exp: return atom_gen;
    }
    return atom(partner, gi.coord_gen, gi.mu);
}

int Symbols::sqrt_gen(int radicand_handle) {
    std::lock_guard lk(registry_mutex());
    auto it = sqrts_.find(radicand_handle);
    if (it != sqrts_.end()) return it->second;
    GenInfo gi;
    gi.kind = GenKind::Sqrt;
    gi.radicand_handle = radicand_handle;
    gens_.push_back(gi);
    int id = int(gens_.size()) - 1;
    sqrts_[radicand_handle] = id;
    // side relation sqrt(R)^2 -> R
    square_rules_[id] = radicand_handle;
    return id;
}

int Symbols::jet(const std::string& func, Chart chart, const std::array<bool, 3>& deps,
                 const std::array<int, 3>& deriv) {
    std::lock_guard lk(registry_mutex());
    auto key = std::make_tuple(func, int(chart), deriv);
    auto it = jets_.find(key);
    if (it != jets_.end()) return it->second;
    GenInfo gi;
    gi.kind = GenKind::Jet;
    gi.name = func;
    gi.chart = chart;
    gi.jet_deps = deps;
    gi.jet_deriv = deriv;
    gens_.push_back(gi);
    int id = int(gens_.size()) - 1;
    jets_[key] = id;
    return id;
}

const GenInfo& Symbols::info(int gen) const {
    std::lock_guard lk(registry_mutex());
    return gens_.at(size_t(gen));
}

std::optional<int> Symbols::square_rule(int gen) const {
    std::lock_guard lk(registry_mutex());
    auto it = square_rules_.find(gen);
    if (it == square_rules_.end()) return std::nullopt;
    return it->second;
}

void Symbols::set_param_relation(int gen, int replacement_handle) {
    std::lock_guard lk(registry_mutex());
    square_rules_[gen] = replacement_handle;
}

int Symbols::store_poly_handle(const void* poly_erased) {
    std::lock_guard lk(registry_mutex());
    handles_.push_back(poly_erased);
    return int(handles_.size()) - 1;
}

const void* Symbols::poly_handle(int h) const {
    std::lock_guard lk(registry_mutex());
    return handles_.at(size_t(h));
}

std::array<int, 3> chart_coords(Chart chart) {
    auto& S = Symbols::instance();
    return {S.coord(chart, 0), S.coord(chart, 1), S.coord(chart, 2)};
}

std::string chart_coord_name(Chart chart, int index) {
    static const char* cart[3] = {"x", "y", "z"};
    static const char* cyl[3] = {"r", "phi", "Z"};
    return chart == Chart::Cartesian ? cart[index] : cyl[index];
}

}  // namespace ifield
