#include "ifield/observable.hpp"

#include <cmath>

namespace ifield {

void Observable::add(const MomIdx& m, const NormalForm& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coef.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coef.erase(it);
    }
}

const NormalForm& Observable::at(const MomIdx& m) const {
    static const NormalForm zero;
    auto it = coef.find(m);
    return it == coef.end() ? zero : it->second;
}

Observable Observable::operator+(const Observable& o) const {
    if (chart != o.chart || pres != o.pres)
        throw ExprError("observable chart/presentation mismatch");
    Observable r = *this;
    for (auto& [m, c] : o.coef) r.add(m, c);
    return r;
}

Observable Observable::operator-(const Observable& o) const { return *this + (-o); }

Observable Observable::operator*(const Observable& o) const {
    if (chart != o.chart || pres != o.pres)
        throw ExprError("observable chart/presentation mismatch");
    Observable r = obs_zero(chart, pres);
    for (auto& [m1, c1] : coef)
        for (auto& [m2, c2] : o.coef) {
            MomIdx m{{m1.e[0] + m2.e[0], m1.e[1] + m2.e[1], m1.e[2] + m2.e[2]}};
            r.add(m, c1 * c2);
        }
    return r;
}

Observable Observable::scaled(const NormalForm& c) const {
    Observable r = obs_zero(chart, pres);
    for (auto& [m, cc] : coef) r.add(m, cc * c);
    return r;
}

int Observable::degree() const {
    int d = 0;
    for (auto& [m, c] : coef) d = std::max(d, m.total());
    return d;
}

bool Observable::is_zero() const {
    for (auto& [m, c] : coef)
        if (!c.is_zero()) return false;
    return true;
}

void Observable::prune() {
    for (auto it = coef.begin(); it != coef.end();) {
        if (it->second.is_zero())
            it = coef.erase(it);
        else
            ++it;
    }
}

Observable Observable::derivative_q(int coord_gen) const {
    Observable r = obs_zero(chart, pres);
    for (auto& [m, c] : coef) r.add(m, c.derivative(coord_gen));
    return r;
}

Observable Observable::derivative_p(int j) const {
    Observable r = obs_zero(chart, pres);
    for (auto& [m, c] : coef) {
        if (m.e[size_t(j)] == 0) continue;
        MomIdx d = m;
        d.e[size_t(j)] -= 1;
        r.add(d, c * NormalForm(Rat(m.e[size_t(j)])));
    }
    return r;
}

double Observable::eval(const std::array<double, 6>& pt, double guard) const {
    EvalEnv env;
    env.guard = guard;
    auto q = chart_coords(chart);
    for (int j = 0; j < 3; ++j) env.values[q[size_t(j)]] = pt[size_t(j)];
    double acc = 0;
    for (auto& [m, c] : coef) {
        double v = c.eval(env);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < m.e[size_t(j)]; ++k) v *= pt[size_t(3 + j)];
        acc += v;
    }
    return acc;
}

Observable Observable::momentum_reflected() const {
    Observable r = obs_zero(chart, pres);
    for (auto& [m, c] : coef)
        r.add(m, (m.total() % 2) ? -c : c);
    return r;
}

Observable obs_zero(Chart chart, Momenta pres) {
    Observable o;
    o.chart = chart;
    o.pres = pres;
    return o;
}

Observable obs_scalar(Chart chart, const NormalForm& v, Momenta pres) {
    Observable o = obs_zero(chart, pres);
    o.add(MomIdx{}, v);
    return o;
}

Observable obs_momentum(Chart chart, int j, Momenta pres) {
    Observable o = obs_zero(chart, pres);
    MomIdx m;
    m.e[size_t(j)] = 1;
    o.add(m, NormalForm(Rat(1)));
    return o;
}

Observable obs_angular(int j, Momenta pres) {
    auto q = chart_coords(Chart::Cartesian);
    auto Q = [&](int k) { return NormalForm::gen(q[size_t(k)]); };
    int k = (j + 1) % 3, l = (j + 2) % 3;
    Observable o = obs_momentum(Chart::Cartesian, l, pres).scaled(Q(k)) -
                   obs_momentum(Chart::Cartesian, k, pres).scaled(Q(l));
    return o;
}

Observable hamiltonian_observable(Chart chart, const Expr& W) {
    Observable H = obs_scalar(chart, normal_form(W), Momenta::Covariant);
    NormalForm half{Rat(1, 2)};
    for (int j = 0; j < 3; ++j) {
        Observable pj = obs_momentum(chart, j, Momenta::Covariant);
        NormalForm c = half;
        if (chart == Chart::Cylindrical && j == 1)
            c = c / NormalForm::gen(Symbols::instance().coord(chart, 0), 2);
        H = H + (pj * pj).scaled(c);
    }
    return H;
}

Observable to_cylindrical(const Observable& cart) {
    if (cart.chart != Chart::Cartesian)
        throw ExprError("to_cylindrical expects a Cartesian observable");
    auto& S = Symbols::instance();
    int xg = S.coord(Chart::Cartesian, 0), yg = S.coord(Chart::Cartesian, 1),
        zg = S.coord(Chart::Cartesian, 2);
    int rg = S.coord(Chart::Cylindrical, 0), Zg = S.coord(Chart::Cylindrical, 2);
    ParamMono one;
    NormalForm cosp = NormalForm::gen(S.atom(AtomFn::Cos, S.coord(Chart::Cylindrical, 1), one));
    NormalForm sinp = NormalForm::gen(S.atom(AtomFn::Sin, S.coord(Chart::Cylindrical, 1), one));
    NormalForm rr = NormalForm::gen(rg);
    NormalForm inv_r = NormalForm(Rat(1)) / rr;

    // p1 -> cos*pr - sin/r * pphi ; p2 -> sin*pr + cos/r * pphi ; p3 -> pZ
    std::array<std::array<NormalForm, 3>, 3> mom;
    mom[0] = {cosp, -(sinp * inv_r), NormalForm()};
    mom[1] = {sinp, cosp * inv_r, NormalForm()};
    mom[2] = {NormalForm(), NormalForm(), NormalForm(Rat(1))};

    Observable out = obs_zero(Chart::Cylindrical, cart.pres);
    for (auto& [m, c] : cart.coef) {
        NormalForm cc = c.substitute_gen(xg, rr * cosp)
                            .substitute_gen(yg, rr * sinp)
                            .substitute_gen(zg, NormalForm::gen(Zg));
        Observable term = obs_scalar(Chart::Cylindrical, cc, cart.pres);
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < m.e[size_t(j)]; ++k) {
                Observable lin = obs_zero(Chart::Cylindrical, cart.pres);
                for (int t = 0; t < 3; ++t) {
                    if (mom[size_t(j)][size_t(t)].is_zero()) continue;
                    MomIdx mi;
                    mi.e[size_t(t)] = 1;
                    lin.add(mi, mom[size_t(j)][size_t(t)]);
                }
                term = term * lin;
            }
        }
        out = out + term;
    }
    return out;
}

Observable to_canonical(const Observable& obs, const OneForm& A, int sigma) {
    if (obs.pres != Momenta::Covariant)
        throw ExprError("to_canonical expects a covariant observable");
    if (A.chart != obs.chart) throw ExprError("gauge chart mismatch");
    std::array<NormalForm, 3> a;
    for (int j = 0; j < 3; ++j) {
        a[size_t(j)] = normal_form(A.comp[size_t(j)]);
        if (sigma < 0) a[size_t(j)] = -a[size_t(j)];
    }
    Observable out = obs_zero(obs.chart, Momenta::Canonical);
    for (auto& [m, c] : obs.coef) {
        Observable term = obs_scalar(obs.chart, c, Momenta::Canonical);
        for (int j = 0; j < 3; ++j) {
            Observable lin = obs_momentum(obs.chart, j, Momenta::Canonical) +
                             obs_scalar(obs.chart, a[size_t(j)], Momenta::Canonical);
            for (int k = 0; k < m.e[size_t(j)]; ++k) term = term * lin;
        }
        out = out + term;
    }
    return out;
}

Observable build_observable(const IntegralSpec& spec) {
    Chart bc = Chart::Cartesian;
    std::array<Observable, 3> P = {obs_momentum(bc, 0, Momenta::Covariant),
                                   obs_momentum(bc, 1, Momenta::Covariant),
                                   obs_momentum(bc, 2, Momenta::Covariant)};
    std::array<Observable, 3> L = {obs_angular(0, Momenta::Covariant),
                                   obs_angular(1, Momenta::Covariant),
                                   obs_angular(2, Momenta::Covariant)};
    Observable X = obs_zero(bc, Momenta::Covariant);
    for (auto& [ij, cexpr] : spec.alpha)
        X = X + (L[size_t(ij.first)] * L[size_t(ij.second)]).scaled(normal_form(cexpr));
    for (auto& [ij, cexpr] : spec.beta)
        X = X + (P[size_t(ij.first)] * L[size_t(ij.second)]).scaled(normal_form(cexpr));
    for (auto& [ij, cexpr] : spec.gamma)
        X = X + (P[size_t(ij.first)] * P[size_t(ij.second)]).scaled(normal_form(cexpr));
    if (spec.chart == Chart::Cylindrical) X = to_cylindrical(X);
    for (int j = 0; j < 3; ++j)
        X = X + obs_momentum(spec.chart, j, Momenta::Covariant)
                    .scaled(normal_form(spec.s[size_t(j)]));
    X = X + obs_scalar(spec.chart, normal_form(spec.m), Momenta::Covariant);
    return X;
}

}  // namespace ifield
