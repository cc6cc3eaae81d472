#include "ifield/forms.hpp"

namespace ifield {

OneForm make_one_form(Chart chart, const std::string& a1, const std::string& a2,
                      const std::string& a3) {
    return OneForm{chart, {parse_expr(a1), parse_expr(a2), parse_expr(a3)}};
}

TwoForm make_two_form(Chart chart, const std::string& b1, const std::string& b2,
                      const std::string& b3) {
    return TwoForm{chart, {parse_expr(b1), parse_expr(b2), parse_expr(b3)}};
}

TwoForm exterior_derivative(const OneForm& A) {
    auto q = chart_coords(A.chart);
    TwoForm B;
    B.chart = A.chart;
    B.comp[0] = differentiate(A.comp[2], q[1]) - differentiate(A.comp[1], q[2]);
    B.comp[1] = differentiate(A.comp[0], q[2]) - differentiate(A.comp[2], q[0]);
    B.comp[2] = differentiate(A.comp[1], q[0]) - differentiate(A.comp[0], q[1]);
    return B;
}

Expr divergence(const TwoForm& B) {
    auto q = chart_coords(B.chart);
    return differentiate(B.comp[0], q[0]) + differentiate(B.comp[1], q[1]) +
           differentiate(B.comp[2], q[2]);
}

namespace {

// int_0^1 t^n fn(sigma t) dt, closed form by integration by parts
NormalForm ray_integral(int n, AtomFn fn, const NormalForm& sigma,
                        const NormalForm& fn_sigma, const NormalForm& partner_sigma) {
    // fn_sigma = fn(sigma), partner_sigma = partner(sigma)
    if (n == 0) {
        switch (fn) {
            case AtomFn::Sin:  // (1 - cos sigma)/sigma
                return (NormalForm(1) - partner_sigma) / sigma;
            case AtomFn::Cos:  // sin(sigma)/sigma
                return partner_sigma / sigma;
            case AtomFn::Sinh:  // (cosh sigma - 1)/sigma
                return (partner_sigma - NormalForm(1)) / sigma;
            case AtomFn::Cosh:  // sinh(sigma)/sigma
                return partner_sigma / sigma;
            case AtomFn::Exp:  // (e^sigma - 1)/sigma
                return (fn_sigma - NormalForm(1)) / sigma;
        }
    }
    NormalForm nn{Rat(n)};
    switch (fn) {
        case AtomFn::Sin:
            // -cos(s)/s + (n/s) * I(n-1, cos)
            return (-partner_sigma) / sigma +
                   nn / sigma * ray_integral(n - 1, AtomFn::Cos, sigma, partner_sigma, fn_sigma);
        case AtomFn::Cos:
            return partner_sigma / sigma -
                   nn / sigma * ray_integral(n - 1, AtomFn::Sin, sigma, partner_sigma, fn_sigma);
        case AtomFn::Sinh:
            return partner_sigma / sigma -
                   nn / sigma * ray_integral(n - 1, AtomFn::Cosh, sigma, partner_sigma, fn_sigma);
        case AtomFn::Cosh:
            return partner_sigma / sigma -
                   nn / sigma * ray_integral(n - 1, AtomFn::Sinh, sigma, partner_sigma, fn_sigma);
        case AtomFn::Exp:
            return fn_sigma / sigma -
                   nn / sigma * ray_integral(n - 1, AtomFn::Exp, sigma, fn_sigma, fn_sigma);
    }
    return NormalForm();
}

// int_0^1 t * Bk(t q) dt for one Cartesian component
NormalForm ray_component(const NormalForm& Bk) {
    auto& S = Symbols::instance();
    if (!Bk.den_trivial())
        throw ExprError("poincare_gauge: component outside the supported class "
                        "(composite denominator)");
    NormalForm acc;
    for (auto& [m, c] : Bk.num().terms()) {
        int coord_deg = 0;
        int atom_gen = -1;
        Monomial params;
        Monomial coords;
        for (auto& [g, e] : m.v) {
            const GenInfo& gi = S.info(g);
            switch (gi.kind) {
                case GenKind::Coord:
                    if (e < 0)
                        throw ExprError("poincare_gauge: negative coordinate power");
                    coord_deg += e;
                    coords.v.emplace_back(g, e);
                    break;
                case GenKind::Param:
                    params.v.emplace_back(g, e);
                    break;
                case GenKind::Atom:
                    if (atom_gen >= 0 || e != 1)
                        throw ExprError("poincare_gauge: unsupported atom shape");
                    atom_gen = g;
                    break;
                default:
                    throw ExprError("poincare_gauge: unsupported term");
            }
        }
        Poly base;
        base.add_term(coords.times(params), c);
        NormalForm base_nf{base};
        if (atom_gen < 0) {
            acc += base_nf / NormalForm(Rat(coord_deg + 2));
            continue;
        }
        const GenInfo& ai = S.info(atom_gen);
        // atom argument is mu * coord; the scaled argument coordinate counts
        // one more t power inside fn(sigma t)
        NormalForm sigma = param_mono_nf(ai.mu) * NormalForm::gen(ai.coord_gen);
        NormalForm fn_sigma = NormalForm::gen(atom_gen);
        NormalForm partner_sigma = NormalForm::gen(S.atom_partner(atom_gen));
        acc += base_nf * ray_integral(coord_deg + 1, ai.fn, sigma, fn_sigma, partner_sigma);
    }
    return acc;
}

}  // namespace

OneForm poincare_gauge(const TwoForm& B) {
    if (B.chart != Chart::Cartesian)
        throw ExprError("poincare_gauge: Cartesian chart required");
    if (!normal_form(divergence(B)).is_zero())
        throw ExprError("poincare_gauge: B is not closed");
    std::array<NormalForm, 3> C;
    for (int k = 0; k < 3; ++k) C[size_t(k)] = ray_component(normal_form(B.comp[size_t(k)]));
    auto q = chart_coords(Chart::Cartesian);
    NormalForm x = NormalForm::gen(q[0]), y = NormalForm::gen(q[1]),
               z = NormalForm::gen(q[2]);
    OneForm A;
    A.chart = Chart::Cartesian;
    A.comp[0] = to_expr(z * C[1] - y * C[2]);
    A.comp[1] = to_expr(x * C[2] - z * C[0]);
    A.comp[2] = to_expr(y * C[0] - x * C[1]);
    return A;
}

OneForm gauge_shift(const OneForm& A, const Expr& chi) {
    auto q = chart_coords(A.chart);
    OneForm r = A;
    for (int j = 0; j < 3; ++j)
        r.comp[size_t(j)] = A.comp[size_t(j)] + differentiate(chi, q[size_t(j)]);
    return r;
}

bool two_forms_equal(const TwoForm& a, const TwoForm& b) {
    if (a.chart != b.chart) return false;
    for (int j = 0; j < 3; ++j)
        if (!normal_form(a.comp[size_t(j)] - b.comp[size_t(j)]).is_zero()) return false;
    return true;
}

bool one_forms_equal(const OneForm& a, const OneForm& b) {
    if (a.chart != b.chart) return false;
    for (int j = 0; j < 3; ++j)
        if (!normal_form(a.comp[size_t(j)] - b.comp[size_t(j)]).is_zero()) return false;
    return true;
}

}  // namespace ifield
