#include "ifield/compile.hpp"

#include <cmath>

namespace ifield {

double CompiledPoly::eval(const std::vector<double>& slots) const {
    double acc = 0;
    for (auto& t : terms) {
        double v = t.c;
        for (auto& [s, e] : t.pows) {
            double b = slots[size_t(s)];
            if (e == 1) {
                v *= b;
            } else if (e > 1) {
                double p = b;
                for (int k = 1; k < e; ++k) p *= b;
                v *= p;
            } else {
                v *= std::pow(b, e);
            }
        }
        acc += v;
    }
    return acc;
}

double CompiledNF::eval(const std::vector<double>& slots, double guard) const {
    double v = num.eval(slots);
    for (auto& [f, k] : den) {
        double fv = f.eval(slots);
        if (std::fabs(fv) < guard) throw EvalError("compiled denominator under guard");
        for (int i = 0; i < k; ++i) v /= fv;
    }
    return v;
}

CompiledContext::CompiledContext(Chart chart) : chart_(chart) {
    auto q = chart_coords(chart);
    for (int j = 0; j < 3; ++j) {
        SlotDef d;
        d.kind = SlotDef::CoordSlot;
        d.coord_index = j;
        slot_map_[q[size_t(j)]] = int(defs_.size());
        defs_.push_back(d);
    }
}

int CompiledContext::slot_of(int gen) {
    auto it = slot_map_.find(gen);
    if (it != slot_map_.end()) return it->second;
    const GenInfo& gi = Symbols::instance().info(gen);
    SlotDef d;
    switch (gi.kind) {
        case GenKind::Atom: {
            d.kind = SlotDef::AtomSlot;
            d.fn = gi.fn;
            double mu = gi.mu.coeff.get_d();
            if (!gi.mu.pows.empty())
                throw ExprError("compile: symbolic parameters present in atom argument");
            d.mu = mu;
            d.arg_slot = slot_of(gi.coord_gen);
            break;
        }
        case GenKind::Sqrt: {
            d.kind = SlotDef::SqrtSlot;
            const Poly& R = stored_poly(gi.radicand_handle);
            CompiledPoly cp;
            for (auto& [m, c] : R.terms()) {
                CompiledPoly::Term t;
                t.c = c.get_d();
                for (auto& [g, e] : m.v) t.pows.emplace_back(slot_of(g), e);
                cp.terms.push_back(std::move(t));
            }
            d.radicand = std::move(cp);
            break;
        }
        case GenKind::Param:
            throw ExprError("compile: symbolic parameters present: " + gi.name);
        case GenKind::Jet:
            throw ExprError("compile: unbound function symbol: " + gi.name);
        case GenKind::Coord:
            throw ExprError("compile: coordinate of the wrong chart: " + gi.name);
    }
    int slot = int(defs_.size());
    slot_map_[gen] = slot;
    defs_.push_back(std::move(d));
    return slot;
}

CompiledNF CompiledContext::compile(const NormalForm& nf) {
    auto compile_poly = [&](const Poly& p) {
        CompiledPoly cp;
        for (auto& [m, c] : p.terms()) {
            CompiledPoly::Term t;
            t.c = c.get_d();
            for (auto& [g, e] : m.v) t.pows.emplace_back(slot_of(g), e);
            cp.terms.push_back(std::move(t));
        }
        return cp;
    };
    CompiledNF out;
    out.num = compile_poly(nf.num());
    for (auto& [f, k] : nf.den()) out.den.emplace_back(compile_poly(f), k);
    return out;
}

void CompiledContext::fill(const std::array<double, 3>& q,
                           std::vector<double>& slots) const {
    slots.resize(defs_.size());
    for (size_t i = 0; i < defs_.size(); ++i) {
        const SlotDef& d = defs_[i];
        switch (d.kind) {
            case SlotDef::CoordSlot:
                slots[i] = q[size_t(d.coord_index)];
                break;
            case SlotDef::AtomSlot: {
                double arg = d.mu * slots[size_t(d.arg_slot)];
                switch (d.fn) {
                    case AtomFn::Sin: slots[i] = std::sin(arg); break;
                    case AtomFn::Cos: slots[i] = std::cos(arg); break;
                    case AtomFn::Sinh: slots[i] = std::sinh(arg); break;
                    case AtomFn::Cosh: slots[i] = std::cosh(arg); break;
                    case AtomFn::Exp: slots[i] = std::exp(arg); break;
                }
                break;
            }
            case SlotDef::SqrtSlot: {
                double rad = d.radicand.eval(slots);
                slots[i] = rad > 0 ? std::sqrt(rad) : 0.0;
                break;
            }
        }
    }
}

CompiledObservable::CompiledObservable(CompiledContext& ctx, const Observable& obs) {
    for (auto& [m, c] : obs.coef) {
        Entry e;
        e.mom = {m.e[0], m.e[1], m.e[2]};
        e.coef = ctx.compile(c);
        entries_.push_back(std::move(e));
    }
}

double CompiledObservable::eval(const std::vector<double>& slots,
                                const std::array<double, 3>& p, double guard) const {
    double acc = 0;
    for (auto& e : entries_) {
        double v = e.coef.eval(slots, guard);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < e.mom[size_t(j)]; ++k) v *= p[size_t(j)];
        acc += v;
    }
    return acc;
}

}  // namespace ifield
