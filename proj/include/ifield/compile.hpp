#pragma once

#include "ifield/observable.hpp"

namespace ifield {

// Flat numeric form of a polynomial over value slots.
struct CompiledPoly {
    struct Term {
        double c;
        std::vector<std::pair<int, int>> pows;  // (slot, exponent)
    };
    std::vector<Term> terms;

    double eval(const std::vector<double>& slots) const;
};

struct CompiledNF {
    CompiledPoly num;
    std::vector<std::pair<CompiledPoly, int>> den;

    double eval(const std::vector<double>& slots, double guard) const;
};

// Shared slot table: coordinates first, then atom/sqrt values recomputed per
// point. All parameters must be numeric by compile time.
class CompiledContext {
  public:
    explicit CompiledContext(Chart chart);

    CompiledNF compile(const NormalForm& nf);

    // fill the slot vector for a coordinate point
    void fill(const std::array<double, 3>& q, std::vector<double>& slots) const;
    size_t slot_count() const { return defs_.size(); }

  private:
    int slot_of(int gen);

    struct SlotDef {
        enum Kind { CoordSlot, AtomSlot, SqrtSlot } kind;
        int coord_index = -1;  // CoordSlot
        AtomFn fn = AtomFn::Sin;
        double mu = 0;         // AtomSlot: argument mu * coord(coord_index)
        int arg_slot = -1;     // AtomSlot/SqrtSlot input
        CompiledPoly radicand; // SqrtSlot
    };

    Chart chart_;
    std::map<int, int> slot_map_;
    std::vector<SlotDef> defs_;
    friend class CompiledObservable;
};

// Observable compiled against a context; evaluates at (q, p)
class CompiledObservable {
  public:
    CompiledObservable() = default;
    CompiledObservable(CompiledContext& ctx, const Observable& obs);

    double eval(const std::vector<double>& slots,
                const std::array<double, 3>& p, double guard = 1e-12) const;

  private:
    struct Entry {
        std::array<int, 3> mom;
        CompiledNF coef;
    };
    std::vector<Entry> entries_;
};

}  // namespace ifield
