#include "ifield/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ifield {

void EvalEnv::set_param(const std::string& name, double v) {
    values[Symbols::instance().param(name)] = v;
}

void EvalEnv::set_coord(Chart chart, int index, double v) {
    values[Symbols::instance().coord(chart, index)] = v;
}

void EvalEnv::set(const std::string& name, double v) {
    auto& S = Symbols::instance();
    if (S.is_coordinate_name(name)) {
        values[S.coord_by_name(name)] = v;
    } else {
        set_param(name, v);
    }
}

double eval_gen(int gen, const EvalEnv& env) {
    auto& S = Symbols::instance();
    const GenInfo& gi = S.info(gen);
    switch (gi.kind) {
        case GenKind::Param:
        case GenKind::Coord: {
            auto it = env.values.find(gen);
            if (it == env.values.end())
                throw EvalError("unbound symbol: " + gi.name);
            return it->second;
        }
        case GenKind::Atom: {
            double mu = gi.mu.coeff.get_d();
            for (auto& [p, e] : gi.mu.pows) mu *= std::pow(eval_gen(p, env), e);
            double arg = mu * eval_gen(gi.coord_gen, env);
            switch (gi.fn) {
                case AtomFn::Sin: return std::sin(arg);
                case AtomFn::Cos: return std::cos(arg);
                case AtomFn::Sinh: return std::sinh(arg);
                case AtomFn::Cosh: return std::cosh(arg);
                case AtomFn::Exp: return std::exp(arg);
            }
            return 0;
        }
        case GenKind::Sqrt: {
            double rad = eval_poly(stored_poly(gi.radicand_handle), env);
            if (rad < 0) throw EvalError("sqrt of negative value");
            return std::sqrt(rad);
        }
        case GenKind::Jet:
            throw EvalError("unbound function symbol: " + gi.name);
    }
    return 0;
}

double eval_poly(const Poly& p, const EvalEnv& env) {
    double acc = 0;
    for (auto& [m, c] : p.terms()) {
        double t = c.get_d();
        for (auto& [g, e] : m.v) {
            double gv = eval_gen(g, env);
            if (e < 0 && std::fabs(gv) < env.guard)
                throw EvalError("denominator under guard: " +
                                Symbols::instance().info(g).name);
            t *= std::pow(gv, e);
        }
        acc += t;
    }
    return acc;
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    auto& S = Symbols::instance();
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rat cc = c;
        if (first) {
            if (cc < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        bool coef_shown = false;
        if (cc != 1 || m.is_one()) {
            os << cc;
            coef_shown = true;
        }
        bool lead = !coef_shown;
        for (auto& [g, e] : m.v) {
            if (!lead) os << "*";
            lead = false;
            const GenInfo& gi = S.info(g);
            if (gi.kind == GenKind::Atom) {
                os << atom_fn_name(gi.fn) << "[" << g << "]";
            } else if (gi.kind == GenKind::Sqrt) {
                os << "sqrt[" << g << "]";
            } else if (gi.kind == GenKind::Jet) {
                os << gi.name;
                for (int k = 0; k < 3; ++k)
                    for (int j = 0; j < gi.jet_deriv[size_t(k)]; ++j)
                        os << "_" << chart_coord_name(gi.chart, k);
            } else {
                os << gi.name;
            }
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

NormalForm NormalForm::gen(int g, int exp) {
    NormalForm r;
    if (exp >= 0) {
        r.num_ = reduce_relations(Poly::gen(g, exp));
        return r;
    }
    r.num_ = Poly::constant(1);
    Monomial m;
    m.v.emplace_back(g, -exp);
    return r.mul_mono_inverse(m);
}

void NormalForm::push_den_factor(Poly f, int mult) {
    if (mult == 0 || f.is_zero()) return;
    f = reduce_relations(std::move(f));
    if (f.is_zero()) throw ExprError("denominator is identically zero");
    // peel off the monomial part of the factor into Laurent exponents
    // f = mono * proper; dividing by mono is exact
    if (f.size() == 1) {
        auto& [m, c] = *f.terms().begin();
        for (int i = 0; i < mult; ++i) *this = mul_mono_inverse(m);
        Rat cp;
        mpz_pow_ui(cp.get_num_mpz_t(), c.get_num().get_mpz_t(), unsigned(mult));
        mpz_pow_ui(cp.get_den_mpz_t(), c.get_den().get_mpz_t(), unsigned(mult));
        cp.canonicalize();
        num_ = num_ * (1 / cp);
        return;
    }
    Rat s = f.extract_scalar();
    if (s != 1) {
        Rat sp;
        mpz_pow_ui(sp.get_num_mpz_t(), s.get_num().get_mpz_t(), unsigned(mult));
        mpz_pow_ui(sp.get_den_mpz_t(), s.get_den().get_mpz_t(), unsigned(mult));
        sp.canonicalize();
        num_ = num_ * (1 / sp);
    }
    den_[f] += mult;
}

// multiply by the inverse of a single monomial (Laurent fold, with ruled
// generators routed through their quadratic relation)
NormalForm NormalForm::mul_mono_inverse(const Monomial& m) const {
    auto& S = Symbols::instance();
    NormalForm r = *this;
    for (auto& [g, e] : m.v) {
        if (auto rule = S.square_rule(g)) {
            // 1/g^e = g^e / R^e with g^2 -> R
            r.num_ = reduce_relations(r.num_ * Poly::gen(g, e));
            Poly R = stored_poly(*rule);
            if (R.is_constant()) {
                const Rat* c = R.constant_value();
                Rat cp;
                mpz_pow_ui(cp.get_num_mpz_t(), c->get_num().get_mpz_t(), unsigned(e));
                mpz_pow_ui(cp.get_den_mpz_t(), c->get_den().get_mpz_t(), unsigned(e));
                cp.canonicalize();
                r.num_ = r.num_ * (1 / cp);
            } else if (R.size() == 1) {
                for (int i = 0; i < e; ++i)
                    r = r.mul_mono_inverse(R.terms().begin()->first);
                auto& cc = R.terms().begin()->second;
                Rat cp;
                mpz_pow_ui(cp.get_num_mpz_t(), cc.get_num().get_mpz_t(), unsigned(e));
                mpz_pow_ui(cp.get_den_mpz_t(), cc.get_den().get_mpz_t(), unsigned(e));
                cp.canonicalize();
                r.num_ = r.num_ * (1 / cp);
            } else {
                r.push_den_factor(R, e);
            }
        } else {
            Poly moved;
            for (auto& [mm, c] : r.num_.terms()) {
                Monomial nm;
                bool placed = false;
                for (auto& [gg, ee] : mm.v) {
                    if (gg == g) {
                        if (ee != e) nm.v.emplace_back(gg, ee - e);
                        placed = true;
                    } else {
                        if (!placed && gg > g) {
                            nm.v.emplace_back(g, -e);
                            placed = true;
                        }
                        nm.v.emplace_back(gg, ee);
                    }
                }
                if (!placed) nm.v.emplace_back(g, -e);
                std::sort(nm.v.begin(), nm.v.end());
                moved.add_term(nm, c);
            }
            r.num_ = std::move(moved);
        }
    }
    return r;
}

void NormalForm::cancel() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    if (den_.empty()) return;
    // split off the Laurent-monomial part so exact division sees a proper
    // polynomial (termination of the division loop needs exponents >= 0)
    std::map<int, int> minexp;
    for (auto& [m, c] : num_.terms())
        for (auto& [g, e] : m.v) {
            auto it = minexp.find(g);
            if (it == minexp.end())
                minexp[g] = e;
            else
                it->second = std::min(it->second, e);
        }
    Monomial shift;
    for (auto& [g, e] : minexp)
        if (e < 0) shift.v.emplace_back(g, e);
    Poly proper;
    if (shift.v.empty()) {
        proper = num_;
    } else {
        Monomial unshift;
        for (auto& [g, e] : shift.v) unshift.v.emplace_back(g, -e);
        for (auto& [m, c] : num_.terms()) proper.add_term(m.times(unshift), c);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = proper.divide_exact(it->first)) {
                proper = std::move(*q);
                if (--it->second == 0) den_.erase(it);
                changed = true;
                break;
            }
        }
    }
    if (shift.v.empty()) {
        num_ = std::move(proper);
    } else {
        Poly out;
        for (auto& [m, c] : proper.terms()) out.add_term(m.times(shift), c);
        num_ = std::move(out);
    }
}

NormalForm NormalForm::operator-() const {
    NormalForm r = *this;
    r.num_ = -r.num_;
    return r;
}

NormalForm NormalForm::operator+(const NormalForm& o) const {
    NormalForm r;
    // factor-wise lcm of denominators
    std::map<Poly, int> L = den_;
    for (auto& [f, k] : o.den_) {
        auto it = L.find(f);
        if (it == L.end())
            L[f] = k;
        else
            it->second = std::max(it->second, k);
    }
    Poly n1 = num_, n2 = o.num_;
    for (auto& [f, k] : L) {
        int k1 = 0, k2 = 0;
        if (auto it = den_.find(f); it != den_.end()) k1 = it->second;
        if (auto it = o.den_.find(f); it != o.den_.end()) k2 = it->second;
        if (k > k1) n1 = n1 * f.pow(k - k1);
        if (k > k2) n2 = n2 * f.pow(k - k2);
    }
    r.num_ = reduce_relations(n1 + n2);
    r.den_ = std::move(L);
    r.cancel();
    return r;
}

NormalForm NormalForm::operator-(const NormalForm& o) const { return *this + (-o); }

NormalForm NormalForm::operator*(const NormalForm& o) const {
    NormalForm r;
    r.num_ = reduce_relations(num_ * o.num_);
    r.den_ = den_;
    for (auto& [f, k] : o.den_) r.den_[f] += k;
    r.cancel();
    return r;
}

NormalForm NormalForm::operator/(const NormalForm& o) const {
    if (o.is_zero()) throw ExprError("division by symbolically zero expression");
    NormalForm r;
    r.num_ = num_;
    r.den_ = den_;
    for (auto& [f, k] : o.den_) r.num_ = r.num_ * f.pow(k);
    r.num_ = reduce_relations(r.num_);
    if (o.num_.size() == 1) {
        auto& [m, c] = *o.num_.terms().begin();
        r = r.mul_mono_inverse(m);
        r.num_ = r.num_ * (1 / c);
    } else {
        Poly f = o.num_;
        Rat s = f.extract_scalar();
        r.num_ = r.num_ * (1 / s);
        r.push_den_factor(f, 1);
    }
    r.cancel();
    return r;
}

NormalForm NormalForm::pow(int n) const {
    if (n == 0) return NormalForm(Rat(1));
    bool inv = n < 0;
    if (inv) n = -n;
    NormalForm r(Rat(1));
    NormalForm base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    if (inv) r = NormalForm(Rat(1)) / r;
    return r;
}

NormalForm gen_derivative(int g, int v) {
    auto& S = Symbols::instance();
    const GenInfo& gi = S.info(g);
    switch (gi.kind) {
        case GenKind::Param:
            return NormalForm();
        case GenKind::Coord:
            return g == v ? NormalForm(Rat(1)) : NormalForm();
        case GenKind::Atom: {
            if (gi.coord_gen != v) return NormalForm();
            NormalForm mu = param_mono_nf(gi.mu);
            int partner = S.atom_partner(g);
            switch (gi.fn) {
                case AtomFn::Sin: return mu * NormalForm::gen(partner);
                case AtomFn::Cos: return -(mu * NormalForm::gen(partner));
                case AtomFn::Sinh: return mu * NormalForm::gen(partner);
                case AtomFn::Cosh: return mu * NormalForm::gen(partner);
                case AtomFn::Exp: return mu * NormalForm::gen(g);
            }
            return NormalForm();
        }
        case GenKind::Sqrt: {
            const Poly& R = stored_poly(gi.radicand_handle);
            NormalForm dR;
            for (int cg : R.generators()) {
                NormalForm d = gen_derivative(cg, v);
                if (!d.is_zero()) dR += NormalForm(R.derivative_wrt_gen(cg)) * d;
            }
            if (dR.is_zero()) return dR;
            return dR / (NormalForm(Rat(2)) * NormalForm::gen(g));
        }
        case GenKind::Jet: {
            const GenInfo& vi = S.info(v);
            if (vi.kind != GenKind::Coord || vi.chart != gi.chart) return NormalForm();
            if (!gi.jet_deps[size_t(vi.coord_index)]) return NormalForm();
            auto d = gi.jet_deriv;
            d[size_t(vi.coord_index)] += 1;
            return NormalForm::gen(S.jet(gi.name, gi.chart, gi.jet_deps, d));
        }
    }
    return NormalForm();
}

NormalForm NormalForm::derivative(int v) const {
    auto d_poly = [&](const Poly& p) {
        NormalForm acc;
        for (int g : p.generators()) {
            NormalForm dg = gen_derivative(g, v);
            if (!dg.is_zero()) acc += NormalForm(p.derivative_wrt_gen(g)) * dg;
        }
        return acc;
    };
    NormalForm inv_den(Rat(1));
    for (auto& [f, k] : den_) {
        NormalForm fn;
        fn.num_ = f;
        inv_den = inv_den / fn.pow(k);
    }
    NormalForm nnf;
    nnf.num_ = num_;
    NormalForm result = d_poly(num_) * inv_den;
    for (auto& [f, k] : den_) {
        NormalForm df = d_poly(f);
        if (df.is_zero()) continue;
        NormalForm fn;
        fn.num_ = f;
        result -= nnf * inv_den * NormalForm(Rat(k)) * df / fn;
    }
    return result;
}

double NormalForm::eval(const EvalEnv& env) const {
    double v = eval_poly(num_, env);
    for (auto& [f, k] : den_) {
        double fv = eval_poly(f, env);
        if (std::fabs(fv) < env.guard)
            throw EvalError("denominator under guard: " + poly_to_string(f));
        v /= std::pow(fv, k);
    }
    return v;
}

NormalForm NormalForm::substitute_gen(int gen, const NormalForm& value) const {
    auto sub_poly = [&](const Poly& p) {
        NormalForm acc;
        for (auto& [m, c] : p.terms()) {
            NormalForm term{Poly::constant(c)};
            for (auto& [g, e] : m.v) {
                NormalForm base = (g == gen) ? value : NormalForm::gen(g);
                term = term * base.pow(e);
            }
            acc += term;
        }
        return acc;
    };
    NormalForm r = sub_poly(num_);
    for (auto& [f, k] : den_) r = r / sub_poly(f).pow(k);
    return r;
}

bool NormalForm::depends_on_gen(int gen) const {
    if (num_.depends_on(gen)) return true;
    for (auto& [f, k] : den_)
        if (f.depends_on(gen)) return true;
    return false;
}

std::vector<int> NormalForm::all_generators() const {
    std::vector<int> gs = num_.generators();
    for (auto& [f, k] : den_)
        for (int g : f.generators())
            if (!std::binary_search(gs.begin(), gs.end(), g))
                gs.insert(std::upper_bound(gs.begin(), gs.end(), g), g);
    return gs;
}

std::string NormalForm::to_string() const {
    std::string s = poly_to_string(num_);
    if (!den_.empty()) {
        s = "(" + s + ") / (";
        bool first = true;
        for (auto& [f, k] : den_) {
            if (!first) s += " * ";
            first = false;
            s += "(" + poly_to_string(f) + ")";
            if (k != 1) s += "^" + std::to_string(k);
        }
        s += ")";
    }
    return s;
}

NormalForm limit_param_to_zero(const NormalForm& nf, int param_gen) {
    for (auto& [f, k] : nf.den())
        if (f.depends_on(param_gen))
            throw ExprError("limit: denominator depends on the parameter");
    for (auto& [m, c] : nf.num().terms())
        if (m.exponent_of(param_gen) < 0)
            throw ExprError("limit does not exist: negative power of " +
                            Symbols::instance().info(param_gen).name + " survives");
    Poly p = nf.num().coeff_of(param_gen, 0);
    NormalForm r{p};
    for (auto& [f, k] : nf.den()) {
        NormalForm fn{f};
        r = r / fn.pow(k);
    }
    return r;
}

NormalForm param_nf(const std::string& name) {
    return NormalForm::gen(Symbols::instance().param(name));
}

NormalForm coord_nf(Chart chart, int index) {
    return NormalForm::gen(Symbols::instance().coord(chart, index));
}

NormalForm param_mono_nf(const ParamMono& mu) {
    NormalForm r(mu.coeff);
    for (auto& [p, e] : mu.pows) r = r * NormalForm::gen(p, e);
    return r;
}

}  // namespace ifield
