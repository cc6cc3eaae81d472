#pragma once

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ifield {

using Rat = mpq_class;

enum class Chart { Cartesian, Cylindrical };

enum class GenKind { Param, Coord, Atom, Sqrt, Jet };

enum class AtomFn { Sin, Cos, Sinh, Cosh, Exp };

const char* atom_fn_name(AtomFn fn);

// A rational multiple of a parameter monomial, q * prod(param^e); exponents may
// be negative (e.g. 2/a). Used as the linear coefficient of atom arguments.
struct ParamMono {
    Rat coeff = Rat(1);
    std::vector<std::pair<int, int>> pows;  // sorted by generator id, exp != 0

    bool operator==(const ParamMono&) const = default;
    bool operator<(const ParamMono& o) const;
    bool is_zero() const { return coeff == 0; }
    ParamMono abs() const;
};

struct GenInfo {
    GenKind kind;
    std::string name;  // parameter / coordinate / jet function display name
    // Coord
    Chart chart = Chart::Cartesian;
    int coord_index = -1;  // 0,1,2 within the chart
    // Atom: fn(mu * coord)
    AtomFn fn = AtomFn::Sin;
    int coord_gen = -1;
    ParamMono mu;
    // Sqrt: radicand polynomial, stored as an opaque handle into the registry
    int radicand_handle = -1;
    // Jet: base function name + derivative counts per chart coordinate
    std::array<int, 3> jet_deriv{0, 0, 0};
    std::array<bool, 3> jet_deps{false, false, false};
};

class ExprError : public std::runtime_error {
  public:
    explicit ExprError(const std::string& what) : std::runtime_error(what) {}
};

// Registry of polynomial generators. Append-only; ids are dense ints.
// All symbolic state of the process lives here.
class Symbols {
  public:
    static Symbols& instance();

    int param(const std::string& name);
    int coord(Chart chart, int index);
    int coord_by_name(const std::string& name);  // x,y,z,r,phi,Z
    int atom(AtomFn fn, int coord_gen, const ParamMono& mu);
    int atom_partner(int atom_gen);  // sin<->cos, sinh<->cosh, exp->self
    int sqrt_gen(int radicand_handle);
    int jet(const std::string& func, Chart chart, const std::array<bool, 3>& deps,
            const std::array<int, 3>& deriv);

    const GenInfo& info(int gen) const;
    std::optional<int> find_param(const std::string& name) const;

    // quadratic side relations g^2 -> handle of replacement polynomial
    std::optional<int> square_rule(int gen) const;
    void set_param_relation(int gen, int replacement_handle);

    // opaque polynomial handles (radicands, relation replacements)
    int store_poly_handle(const void* poly_erased);
    const void* poly_handle(int h) const;

    bool is_coordinate_name(const std::string& name) const;

  private:
    Symbols();
    std::deque<GenInfo> gens_;  // stable references
    std::map<std::string, int> params_;
    std::map<std::pair<int, int>, int> coords_;  // (chart, index) -> gen
    std::map<std::tuple<int, int, ParamMono>, int> atoms_;
    std::map<int, int> sqrts_;  // radicand handle -> gen
    std::map<std::tuple<std::string, int, std::array<int, 3>>, int> jets_;
    std::map<int, int> square_rules_;  // gen -> replacement handle
    std::vector<const void*> handles_;
};

// Convenience lookups for the two charts' coordinate generators.
std::array<int, 3> chart_coords(Chart chart);
std::string chart_coord_name(Chart chart, int index);

}  // namespace ifield
