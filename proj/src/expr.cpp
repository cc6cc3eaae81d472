#include "ifield/expr.hpp"

#include <cmath>

namespace ifield {

Expr make_expr(ExprNode&& node) {
    return Expr(std::make_shared<const ExprNode>(std::move(node)));
}

Expr::Expr() {
    ExprNode n;
    n.kind = NodeKind::Num;
    n.num = 0;
    n_ = std::make_shared<const ExprNode>(std::move(n));
}

bool Expr::is_zero_literal() const {
    return n_->kind == NodeKind::Num && n_->num == 0;
}

Expr Expr::number(const Rat& c) {
    ExprNode n;
    n.kind = NodeKind::Num;
    n.num = c;
    return make_expr(std::move(n));
}

Expr Expr::symbol(const std::string& name) {
    auto& S = Symbols::instance();
    ExprNode n;
    n.kind = NodeKind::Sym;
    n.sym = S.is_coordinate_name(name) ? S.coord_by_name(name) : S.param(name);
    return make_expr(std::move(n));
}

Expr Expr::symbol_gen(int gen) {
    ExprNode n;
    n.kind = NodeKind::Sym;
    n.sym = gen;
    return make_expr(std::move(n));
}

Expr Expr::call(CallFn fn, Expr arg) {
    ExprNode n;
    n.kind = NodeKind::Call;
    n.fn = fn;
    n.kids.push_back(std::move(arg));
    return make_expr(std::move(n));
}

Expr Expr::jet(const std::string& func, Chart chart, const std::array<bool, 3>& deps,
               const std::array<int, 3>& deriv) {
    ExprNode n;
    n.kind = NodeKind::JetCall;
    n.jet_func = func;
    n.jet_chart = chart;
    n.jet_deps = deps;
    n.jet_deriv = deriv;
    return make_expr(std::move(n));
}

Expr Expr::operator+(const Expr& o) const {
    if (is_zero_literal()) return o;
    if (o.is_zero_literal()) return *this;
    ExprNode n;
    n.kind = NodeKind::Add;
    n.kids = {*this, o};
    return make_expr(std::move(n));
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator-() const { return Expr::number(Rat(-1)) * (*this); }

Expr Expr::operator*(const Expr& o) const {
    if (is_zero_literal() || o.is_zero_literal()) return Expr();
    if (n_->kind == NodeKind::Num && n_->num == 1) return o;
    if (o.n_->kind == NodeKind::Num && o.n_->num == 1) return *this;
    ExprNode n;
    n.kind = NodeKind::Mul;
    n.kids = {*this, o};
    return make_expr(std::move(n));
}

Expr Expr::operator/(const Expr& o) const {
    ExprNode n;
    n.kind = NodeKind::Quot;
    n.kids = {*this, o};
    return make_expr(std::move(n));
}

Expr Expr::pow(int k) const {
    ExprNode n;
    n.kind = NodeKind::Pow;
    n.kids = {*this};
    n.ipow = k;
    return make_expr(std::move(n));
}

// --- differentiation --------------------------------------------------------

Expr differentiate(const Expr& e, int v) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case NodeKind::Num:
            return Expr();
        case NodeKind::Sym: {
            const GenInfo& gi = Symbols::instance().info(n.sym);
            if (gi.kind == GenKind::Coord && n.sym == v) return Expr::integer(1);
            return Expr();
        }
        case NodeKind::Add: {
            Expr r;
            for (auto& k : n.kids) r = r + differentiate(k, v);
            return r;
        }
        case NodeKind::Mul: {
            Expr r;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                Expr term = differentiate(n.kids[i], v);
                if (term.is_zero_literal()) continue;
                for (size_t j = 0; j < n.kids.size(); ++j)
                    if (j != i) term = term * n.kids[j];
                r = r + term;
            }
            return r;
        }
        case NodeKind::Pow: {
            Expr du = differentiate(n.kids[0], v);
            if (du.is_zero_literal() || n.ipow == 0) return Expr();
            return Expr::number(Rat(n.ipow)) * n.kids[0].pow(n.ipow - 1) * du;
        }
        case NodeKind::Quot: {
            const Expr& a = n.kids[0];
            const Expr& b = n.kids[1];
            Expr da = differentiate(a, v), db = differentiate(b, v);
            if (db.is_zero_literal()) return da / b;
            return (da * b - a * db) / (b * b);
        }
        case NodeKind::Call: {
            const Expr& u = n.kids[0];
            Expr du = differentiate(u, v);
            if (du.is_zero_literal()) return Expr();
            switch (n.fn) {
                case CallFn::Sin: return Expr::call(CallFn::Cos, u) * du;
                case CallFn::Cos: return -(Expr::call(CallFn::Sin, u) * du);
                case CallFn::Sinh: return Expr::call(CallFn::Cosh, u) * du;
                case CallFn::Cosh: return Expr::call(CallFn::Sinh, u) * du;
                case CallFn::Exp: return Expr::call(CallFn::Exp, u) * du;
                case CallFn::Sqrt:
                    return du / (Expr::integer(2) * Expr::call(CallFn::Sqrt, u));
            }
            return Expr();
        }
        case NodeKind::JetCall: {
            const GenInfo& vi = Symbols::instance().info(v);
            if (vi.kind != GenKind::Coord || vi.chart != n.jet_chart) return Expr();
            if (!n.jet_deps[size_t(vi.coord_index)]) return Expr();
            auto d = n.jet_deriv;
            d[size_t(vi.coord_index)] += 1;
            return Expr::jet(n.jet_func, n.jet_chart, n.jet_deps, d);
        }
    }
    return Expr();
}

Expr differentiate(const Expr& e, const std::string& coord) {
    return differentiate(e, Symbols::instance().coord_by_name(coord));
}

// --- substitution -----------------------------------------------------------

Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case NodeKind::Num:
            return e;
        case NodeKind::Sym: {
            const GenInfo& gi = Symbols::instance().info(n.sym);
            auto it = bindings.find(gi.name);
            return it == bindings.end() ? e : it->second;
        }
        case NodeKind::Add: {
            Expr r;
            for (auto& k : n.kids) r = r + substitute(k, bindings);
            return r;
        }
        case NodeKind::Mul: {
            Expr r = Expr::integer(1);
            for (auto& k : n.kids) r = r * substitute(k, bindings);
            return r;
        }
        case NodeKind::Pow:
            return substitute(n.kids[0], bindings).pow(n.ipow);
        case NodeKind::Quot:
            return substitute(n.kids[0], bindings) / substitute(n.kids[1], bindings);
        case NodeKind::Call:
            return Expr::call(n.fn, substitute(n.kids[0], bindings));
        case NodeKind::JetCall: {
            auto it = bindings.find(n.jet_func);
            if (it == bindings.end()) return e;
            Expr r = it->second;
            for (int k = 0; k < 3; ++k)
                for (int j = 0; j < n.jet_deriv[size_t(k)]; ++j)
                    r = differentiate(r, Symbols::instance().coord(n.jet_chart, k));
            return r;
        }
    }
    return e;
}

// --- numeric evaluation -----------------------------------------------------

double eval_numeric(const Expr& e, const EvalEnv& env) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case NodeKind::Num:
            return n.num.get_d();
        case NodeKind::Sym:
            return eval_gen(n.sym, env);
        case NodeKind::Add: {
            double s = 0;
            for (auto& k : n.kids) s += eval_numeric(k, env);
            return s;
        }
        case NodeKind::Mul: {
            double s = 1;
            for (auto& k : n.kids) s *= eval_numeric(k, env);
            return s;
        }
        case NodeKind::Pow: {
            double b = eval_numeric(n.kids[0], env);
            if (n.ipow < 0 && std::fabs(b) < env.guard)
                throw EvalError("denominator under guard in power");
            return std::pow(b, n.ipow);
        }
        case NodeKind::Quot: {
            double den = eval_numeric(n.kids[1], env);
            if (std::fabs(den) < env.guard)
                throw EvalError("denominator under guard in quotient");
            return eval_numeric(n.kids[0], env) / den;
        }
        case NodeKind::Call: {
            double u = eval_numeric(n.kids[0], env);
            switch (n.fn) {
                case CallFn::Sin: return std::sin(u);
                case CallFn::Cos: return std::cos(u);
                case CallFn::Sinh: return std::sinh(u);
                case CallFn::Cosh: return std::cosh(u);
                case CallFn::Exp: return std::exp(u);
                case CallFn::Sqrt:
                    if (u < 0) throw EvalError("sqrt of negative value");
                    return std::sqrt(u);
            }
            return 0;
        }
        case NodeKind::JetCall:
            throw EvalError("unbound function symbol: " + n.jet_func);
    }
    return 0;
}

// --- conversion to normal form ----------------------------------------------

namespace {

// one linear term of an atom argument: q * (param monomial) * coord
struct LinTerm {
    int coord;
    Rat q;
    std::vector<std::pair<int, int>> param_pows;
};

std::vector<LinTerm> linear_terms(const NormalForm& arg) {
    if (!arg.den_trivial())
        throw ExprError("atom argument has a composite denominator");
    auto& S = Symbols::instance();
    std::vector<LinTerm> out;
    for (auto& [m, c] : arg.num().terms()) {
        LinTerm t;
        t.coord = -1;
        t.q = c;
        for (auto& [g, e] : m.v) {
            const GenInfo& gi = S.info(g);
            if (gi.kind == GenKind::Coord) {
                if (t.coord >= 0 || e != 1)
                    throw ExprError("nonlinear atom argument: " +
                                    poly_to_string(arg.num()));
                t.coord = g;
            } else if (gi.kind == GenKind::Param) {
                t.param_pows.emplace_back(g, e);
            } else {
                throw ExprError("unsupported atom argument: " +
                                poly_to_string(arg.num()));
            }
        }
        if (t.coord < 0)
            throw ExprError("atom argument term has no coordinate: " +
                            poly_to_string(arg.num()));
        out.push_back(std::move(t));
    }
    return out;
}

// sin/cos (or sinh/cosh) of n*theta as polynomials in the base atoms
std::pair<NormalForm, NormalForm> multiple_angle(AtomFn cfn, AtomFn sfn, int coord,
                                                 const ParamMono& base, int n) {
    auto& S = Symbols::instance();
    NormalForm c1 = NormalForm::gen(S.atom(cfn, coord, base));
    NormalForm s1 = NormalForm::gen(S.atom(sfn, coord, base));
    NormalForm ckm1(Rat(1)), skm1;  // k = 0
    NormalForm ck = c1, sk = s1;    // k = 1
    for (int k = 1; k < n; ++k) {
        NormalForm two_c = NormalForm(Rat(2)) * c1;
        NormalForm cn = two_c * ck - ckm1;
        NormalForm sn = two_c * sk - skm1;
        ckm1 = ck;
        skm1 = sk;
        ck = cn;
        sk = sn;
    }
    return {ck, sk};
}

// (cos-like value, sin-like value) of one linear term, for trig/hyp families
std::pair<NormalForm, NormalForm> term_cos_sin(CallFn fn, const LinTerm& t) {
    bool hyp = (fn == CallFn::Sinh || fn == CallFn::Cosh);
    AtomFn cfn = hyp ? AtomFn::Cosh : AtomFn::Cos;
    AtomFn sfn = hyp ? AtomFn::Sinh : AtomFn::Sin;
    Rat q = t.q;
    int sign = 1;
    if (q < 0) {
        q = -q;
        sign = -1;
    }
    ParamMono base;
    base.coeff = Rat(1, q.get_den());
    base.pows = t.param_pows;
    mpz_class n_int = q.get_num();
    if (!n_int.fits_sint_p()) throw ExprError("atom argument multiple too large");
    int n = int(n_int.get_si());
    auto [c, s] = multiple_angle(cfn, sfn, t.coord, base, n);
    // sin(-u) = -sin(u), sinh(-u) = -sinh(u); cos/cosh are even
    if (sign < 0) s = -s;
    return {c, s};
}

NormalForm atom_nf(CallFn fn, const NormalForm& arg) {
    if (arg.is_zero()) {
        switch (fn) {
            case CallFn::Sin:
            case CallFn::Sinh: return NormalForm();
            case CallFn::Cos:
            case CallFn::Cosh:
            case CallFn::Exp: return NormalForm(Rat(1));
            default: return NormalForm();
        }
    }
    auto& S = Symbols::instance();
    std::vector<LinTerm> terms = linear_terms(arg);
    if (fn == CallFn::Exp) {
        NormalForm r(Rat(1));
        for (auto& t : terms) {
            Rat q = t.q;
            int sign = 1;
            if (q < 0) {
                q = -q;
                sign = -1;
            }
            ParamMono base;
            base.coeff = Rat(1, q.get_den());
            base.pows = t.param_pows;
            mpz_class n_int = q.get_num();
            if (!n_int.fits_sint_p()) throw ExprError("atom argument multiple too large");
            int n = int(n_int.get_si()) * sign;
            r = r * NormalForm::gen(S.atom(AtomFn::Exp, t.coord, base), n);
        }
        return r;
    }
    // addition formulas across terms, cos-like and sin-like accumulators
    NormalForm C(Rat(1)), Sv;
    bool hyp = (fn == CallFn::Sinh || fn == CallFn::Cosh);
    bool first = true;
    for (auto& t : terms) {
        auto [c, s] = term_cos_sin(fn, t);
        if (first) {
            C = c;
            Sv = s;
            first = false;
            continue;
        }
        // trig: cos(A+B) = cA cB - sA sB,  sin(A+B) = sA cB + cA sB
        // hyp:  cosh(A+B) = chA chB + shA shB, sinh(A+B) = shA chB + chA shB
        NormalForm nc = hyp ? (C * c + Sv * s) : (C * c - Sv * s);
        NormalForm ns = Sv * c + C * s;
        C = nc;
        Sv = ns;
    }
    switch (fn) {
        case CallFn::Sin:
        case CallFn::Sinh: return Sv;
        case CallFn::Cos:
        case CallFn::Cosh: return C;
        default: return NormalForm();
    }
}

NormalForm sqrt_nf(const NormalForm& arg) {
    if (!arg.den_trivial())
        throw ExprError("sqrt argument must be polynomial");
    auto& S = Symbols::instance();
    for (int g : arg.num().generators()) {
        GenKind k = S.info(g).kind;
        if (k != GenKind::Param && k != GenKind::Coord)
            throw ExprError("sqrt argument must be polynomial in coordinates "
                            "and parameters");
    }
    // exact square roots of constants
    if (const Rat* c = arg.num().constant_value()) {
        if (*c < 0) throw ExprError("sqrt of negative constant");
        mpz_class rn, rd;
        if (mpz_root(rn.get_mpz_t(), c->get_num().get_mpz_t(), 2) != 0 &&
            mpz_root(rd.get_mpz_t(), c->get_den().get_mpz_t(), 2) != 0) {
            return NormalForm(Rat(rn, rd));
        }
    }
    Poly rad = reduce_relations(arg.num());
    Poly r0 = rad;
    Rat s = r0.extract_scalar();
    if (s != 1) {
        mpz_class rn, rd;
        if (s > 0 && mpz_root(rn.get_mpz_t(), s.get_num().get_mpz_t(), 2) != 0 &&
            mpz_root(rd.get_mpz_t(), s.get_den().get_mpz_t(), 2) != 0) {
            return NormalForm(Rat(rn, rd)) * NormalForm::gen(intern_sqrt(r0));
        }
        return NormalForm::gen(intern_sqrt(rad));
    }
    return NormalForm::gen(intern_sqrt(r0));
}

}  // namespace

NormalForm normal_form(const Expr& e) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case NodeKind::Num:
            return NormalForm(n.num);
        case NodeKind::Sym:
            return NormalForm::gen(n.sym);
        case NodeKind::Add: {
            NormalForm r;
            for (auto& k : n.kids) r += normal_form(k);
            return r;
        }
        case NodeKind::Mul: {
            NormalForm r(Rat(1));
            for (auto& k : n.kids) r = r * normal_form(k);
            return r;
        }
        case NodeKind::Pow:
            return normal_form(n.kids[0]).pow(n.ipow);
        case NodeKind::Quot:
            return normal_form(n.kids[0]) / normal_form(n.kids[1]);
        case NodeKind::Call: {
            NormalForm arg = normal_form(n.kids[0]);
            if (n.fn == CallFn::Sqrt) return sqrt_nf(arg);
            return atom_nf(n.fn, arg);
        }
        case NodeKind::JetCall:
            return NormalForm::gen(Symbols::instance().jet(
                n.jet_func, n.jet_chart, n.jet_deps, n.jet_deriv));
    }
    return NormalForm();
}

bool is_symbolically_zero(const Expr& e) { return normal_form(e).is_zero(); }

// --- normal form back to a printable tree -----------------------------------

namespace {

Expr gen_to_expr(int g);

Expr param_mono_expr(const ParamMono& mu) {
    Expr r = Expr::number(mu.coeff);
    for (auto& [p, e] : mu.pows) r = r * gen_to_expr(p).pow(e);
    return r;
}

Expr poly_to_expr(const Poly& p) {
    Expr sum;
    for (auto& [m, c] : p.terms()) {
        Expr term = Expr::number(c);
        for (auto& [g, e] : m.v) {
            Expr base = gen_to_expr(g);
            term = term * (e == 1 ? base : base.pow(e));
        }
        sum = sum + term;
    }
    return sum;
}

Expr gen_to_expr(int g) {
    auto& S = Symbols::instance();
    const GenInfo& gi = S.info(g);
    switch (gi.kind) {
        case GenKind::Param:
        case GenKind::Coord:
            return Expr::symbol_gen(g);
        case GenKind::Atom: {
            Expr arg = param_mono_expr(gi.mu) * Expr::symbol_gen(gi.coord_gen);
            CallFn fn = CallFn::Sin;
            switch (gi.fn) {
                case AtomFn::Sin: fn = CallFn::Sin; break;
                case AtomFn::Cos: fn = CallFn::Cos; break;
                case AtomFn::Sinh: fn = CallFn::Sinh; break;
                case AtomFn::Cosh: fn = CallFn::Cosh; break;
                case AtomFn::Exp: fn = CallFn::Exp; break;
            }
            return Expr::call(fn, arg);
        }
        case GenKind::Sqrt:
            return Expr::call(CallFn::Sqrt, poly_to_expr(stored_poly(gi.radicand_handle)));
        case GenKind::Jet:
            return Expr::jet(gi.name, gi.chart, gi.jet_deps, gi.jet_deriv);
    }
    return Expr();
}

}  // namespace

Expr to_expr(const NormalForm& nf) {
    Expr num = poly_to_expr(nf.num());
    if (nf.den_trivial()) return num;
    Expr den = Expr::integer(1);
    for (auto& [f, k] : nf.den()) den = den * poly_to_expr(f).pow(k);
    return num / den;
}

}  // namespace ifield
