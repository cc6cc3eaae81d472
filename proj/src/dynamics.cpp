#include "ifield/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ifield {

EomEvaluator::EomEvaluator(const FieldSystem& sys, int sigma)
    : ctx_(sys.chart), sigma_(sigma) {
    if (sys.symbolic)
        throw ExprError("equations_of_motion: symbolic parameters present");
    if (!sys.gauge) throw ExprError("equations_of_motion: no gauge attached");
    if (sys.chart != Chart::Cartesian)
        throw ExprError("equations_of_motion: Cartesian systems only");
    rho_min_ = sys.exclusion_rho_min;

    Observable Hcov = system_observable(sys, -1);
    Observable H = to_canonical(Hcov, *sys.gauge, sigma_);
    Observable X1 = system_observable(sys, 0);
    Observable X2 = system_observable(sys, 1);
    if (sigma_ < 0) {
        X1 = X1.momentum_reflected();
        X2 = X2.momentum_reflected();
    }
    h_ = CompiledObservable(ctx_, H);
    x1_ = CompiledObservable(ctx_, to_canonical(X1, *sys.gauge, sigma_));
    x2_ = CompiledObservable(ctx_, to_canonical(X2, *sys.gauge, sigma_));
    for (int j = 0; j < 3; ++j) {
        rhs_[size_t(j)] = CompiledObservable(ctx_, H.derivative_p(j));
        auto q = chart_coords(sys.chart);
        rhs_[size_t(3 + j)] =
            CompiledObservable(ctx_, -H.derivative_q(q[size_t(j)]));
        gauge_[size_t(j)] = ctx_.compile(normal_form(sys.gauge->comp[size_t(j)]));
    }
}

void EomEvaluator::rhs(const std::array<double, 6>& s, std::array<double, 6>& ds) const {
    std::array<double, 3> q{s[0], s[1], s[2]}, p{s[3], s[4], s[5]};
    ctx_.fill(q, slots_);
    for (int j = 0; j < 6; ++j)
        ds[size_t(j)] = rhs_[size_t(j)].eval(slots_, p, guard_);
}

std::array<double, 3> EomEvaluator::conserved(const std::array<double, 6>& s) const {
    std::array<double, 3> q{s[0], s[1], s[2]}, p{s[3], s[4], s[5]};
    ctx_.fill(q, slots_);
    return {h_.eval(slots_, p, guard_), x1_.eval(slots_, p, guard_),
            x2_.eval(slots_, p, guard_)};
}

double EomEvaluator::hamiltonian(const std::array<double, 6>& s) const {
    return conserved(s)[0];
}

bool EomEvaluator::inside_exclusion(const std::array<double, 3>& q) const {
    if (rho_min_ <= 0) return false;
    return std::hypot(q[0], q[1]) < rho_min_;
}

std::array<double, 3> EomEvaluator::momenta_for_velocity(
    const std::array<double, 3>& q, const std::array<double, 3>& v) const {
    ctx_.fill(q, slots_);
    std::array<double, 3> p;
    for (int j = 0; j < 3; ++j)
        p[size_t(j)] =
            v[size_t(j)] - sigma_ * gauge_[size_t(j)].eval(slots_, guard_);
    return p;
}

namespace {

struct Dp54 {
    // Dormand-Prince 5(4) tableau
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

using State = std::array<double, 6>;

void axpy(State& y, double a, const State& x) {
    for (int i = 0; i < 6; ++i) y[size_t(i)] += a * x[size_t(i)];
}

void check_finite(const State& s) {
    for (double v : s)
        if (!std::isfinite(v)) throw ExprError("integration produced a non-finite state");
}

}  // namespace

Trajectory integrate(const EomEvaluator& eom, const PhaseState& ic, double t_end,
                     const IntegrateOptions& opts) {
    if (t_end <= ic.t) throw ExprError("integrate: t_end must exceed the start time");
    if (opts.rtol <= 0 || opts.atol <= 0)
        throw ExprError("integrate: tolerances must be positive");
    Trajectory traj;
    traj.stats.rtol = opts.rtol;
    traj.stats.atol = opts.atol;

    State y{ic.q[0], ic.q[1], ic.q[2], ic.p[0], ic.p[1], ic.p[2]};
    double t = ic.t;
    if (eom.inside_exclusion({y[0], y[1], y[2]}))
        throw ExprError("initial condition inside the exclusion region");

    auto record = [&](double tt, const State& s) {
        PhaseState ps;
        ps.t = tt;
        ps.q = {s[0], s[1], s[2]};
        ps.p = {s[3], s[4], s[5]};
        traj.samples.push_back(ps);
        traj.conserved.push_back(eom.conserved(s));
    };
    record(t, y);
    double next_out = ic.t + opts.dt_out;

    auto step_checks = [&](const State& s) {
        check_finite(s);
        if (eom.inside_exclusion({s[0], s[1], s[2]}))
            throw ExprError("trajectory entered the exclusion region");
    };

    if (opts.method == Method::ImplicitMidpoint) {
        double h = opts.fixed_step;
        State k, ymid, kprev;
        while (t < t_end - 1e-15) {
            double hs = std::min(h, t_end - t);
            hs = std::min(hs, next_out - t);
            eom.rhs(y, k);
            for (int it = 0; it < 100; ++it) {
                ymid = y;
                axpy(ymid, hs / 2, k);
                kprev = k;
                eom.rhs(ymid, k);
                double delta = 0, scale = 0;
                for (int i = 0; i < 6; ++i) {
                    delta = std::max(delta, std::fabs(k[size_t(i)] - kprev[size_t(i)]));
                    scale = std::max(scale, std::fabs(k[size_t(i)]));
                }
                if (delta <= 1e-14 * std::max(1.0, scale)) break;
            }
            axpy(y, hs, k);
            t += hs;
            ++traj.stats.steps;
            step_checks(y);
            if (t >= next_out - 1e-12) {
                record(t, y);
                next_out += opts.dt_out;
            }
            if (traj.stats.steps > opts.max_steps)
                throw ExprError("integrate: step budget exceeded");
        }
        if (traj.samples.back().t < t - 1e-12) record(t, y);
        return traj;
    }

    // adaptive Dormand-Prince 5(4) with FSAL
    std::array<State, 7> k;
    State ynew, yerr;
    eom.rhs(y, k[0]);
    double h = 1e-4;
    while (t < t_end - 1e-15) {
        bool clipped = false;
        double hs = h;
        if (t + hs > t_end) {
            hs = t_end - t;
            clipped = true;
        }
        if (t + hs > next_out) {
            hs = next_out - t;
            clipped = true;
        }
        State ytmp;

        ytmp = y;
        axpy(ytmp, hs * Dp54::a21, k[0]);
        eom.rhs(ytmp, k[1]);

        ytmp = y;
        axpy(ytmp, hs * Dp54::a31, k[0]);
        axpy(ytmp, hs * Dp54::a32, k[1]);
        eom.rhs(ytmp, k[2]);

        ytmp = y;
        axpy(ytmp, hs * Dp54::a41, k[0]);
        axpy(ytmp, hs * Dp54::a42, k[1]);
        axpy(ytmp, hs * Dp54::a43, k[2]);
        eom.rhs(ytmp, k[3]);

        ytmp = y;
        axpy(ytmp, hs * Dp54::a51, k[0]);
        axpy(ytmp, hs * Dp54::a52, k[1]);
        axpy(ytmp, hs * Dp54::a53, k[2]);
        axpy(ytmp, hs * Dp54::a54, k[3]);
        eom.rhs(ytmp, k[4]);

        ytmp = y;
        axpy(ytmp, hs * Dp54::a61, k[0]);
        axpy(ytmp, hs * Dp54::a62, k[1]);
        axpy(ytmp, hs * Dp54::a63, k[2]);
        axpy(ytmp, hs * Dp54::a64, k[3]);
        axpy(ytmp, hs * Dp54::a65, k[4]);
        eom.rhs(ytmp, k[5]);

        ynew = y;
        axpy(ynew, hs * Dp54::b1, k[0]);
        axpy(ynew, hs * Dp54::b3, k[2]);
        axpy(ynew, hs * Dp54::b4, k[3]);
        axpy(ynew, hs * Dp54::b5, k[4]);
        axpy(ynew, hs * Dp54::b6, k[5]);
        eom.rhs(ynew, k[6]);

        double errnorm = 0;
        for (int i = 0; i < 6; ++i) {
            double e = hs * (Dp54::e1 * k[0][size_t(i)] + Dp54::e3 * k[2][size_t(i)] +
                             Dp54::e4 * k[3][size_t(i)] + Dp54::e5 * k[4][size_t(i)] +
                             Dp54::e6 * k[5][size_t(i)] + Dp54::e7 * k[6][size_t(i)]);
            double sc = opts.atol + opts.rtol * std::max(std::fabs(y[size_t(i)]),
                                                         std::fabs(ynew[size_t(i)]));
            errnorm += (e / sc) * (e / sc);
        }
        errnorm = std::sqrt(errnorm / 6.0);

        if (errnorm <= 1.0) {
            t += hs;
            y = ynew;
            k[0] = k[6];  // FSAL
            ++traj.stats.steps;
            step_checks(y);
            if (t >= next_out - 1e-12) {
                record(t, y);
                next_out += opts.dt_out;
            }
        } else {
            ++traj.stats.rejected;
        }
        double fac = 0.9 * std::pow(std::max(errnorm, 1e-10), -0.2);
        fac = std::min(5.0, std::max(0.2, fac));
        double hnew = hs * fac;
        if (!clipped || errnorm > 1.0) h = hnew;
        if (h < 1e-14 * std::max(1.0, std::fabs(t)))
            throw ExprError("integrate: step size underflow");
        if (traj.stats.steps + traj.stats.rejected > opts.max_steps)
            throw ExprError("integrate: step budget exceeded");
    }
    if (traj.samples.back().t < t - 1e-12) record(t, y);
    return traj;
}

std::string ConservationReport::to_text() const {
    const char* names[3] = {"H", "X1", "X2"};
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%-3s max relative drift %.3e (tol/10 rerun: %.3e, ratio %.2f)\n",
                      names[i], drift[size_t(i)], drift_tighter[size_t(i)],
                      ratio[size_t(i)]);
        os << buf;
    }
    return os.str();
}

namespace {

std::array<double, 3> max_drift(const Trajectory& traj) {
    std::array<double, 3> d{0, 0, 0};
    if (traj.conserved.empty()) return d;
    auto c0 = traj.conserved.front();
    for (auto& c : traj.conserved)
        for (int i = 0; i < 3; ++i) {
            double rel = std::fabs(c[size_t(i)] - c0[size_t(i)]) /
                         std::max(1.0, std::fabs(c0[size_t(i)]));
            d[size_t(i)] = std::max(d[size_t(i)], rel);
        }
    return d;
}

}  // namespace

ConservationReport conservation_report(const EomEvaluator& eom, const PhaseState& ic,
                                       double t_end, const IntegrateOptions& opts) {
    ConservationReport rep;
    Trajectory a = integrate(eom, ic, t_end, opts);
    IntegrateOptions tighter = opts;
    tighter.rtol /= 10;
    tighter.atol /= 10;
    Trajectory b = integrate(eom, ic, t_end, tighter);
    rep.drift = max_drift(a);
    rep.drift_tighter = max_drift(b);
    for (int i = 0; i < 3; ++i)
        rep.ratio[size_t(i)] =
            rep.drift[size_t(i)] / std::max(rep.drift_tighter[size_t(i)], 1e-300);
    return rep;
}

ZExtent classify_z_extent(const Trajectory& traj, double z_escape_factor) {
    ZExtent ze;
    if (traj.samples.empty()) return ze;
    double z0 = traj.samples.front().q[2];
    ze.z_min = ze.z_max = z0;
    double bound = z_escape_factor * std::max(1.0, std::fabs(z0));
    for (auto& s : traj.samples) {
        ze.z_min = std::min(ze.z_min, s.q[2]);
        ze.z_max = std::max(ze.z_max, s.q[2]);
        if (std::fabs(s.q[2]) > bound) ze.escaping = true;
    }
    return ze;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,x,y,z,p1,p2,p3,H,X1,X2\n";
    char buf[512];
    for (size_t i = 0; i < traj.samples.size(); ++i) {
        const PhaseState& s = traj.samples[i];
        const auto& c = traj.conserved[i];
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      s.t, s.q[0], s.q[1], s.q[2], s.p[0], s.p[1], s.p[2], c[0], c[1],
                      c[2]);
        out += buf;
    }
    return out;
}

// --- ray gauge at a point (Gauss-Legendre quadrature of the homotopy) -------

namespace {

// nodes/weights of n-point Gauss-Legendre on [0,1], computed by Newton on
// the Legendre polynomial; deterministic
void gauss_legendre(int n, std::vector<double>& xs, std::vector<double>& ws) {
    xs.resize(size_t(n));
    ws.resize(size_t(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1);
        xs[size_t(i)] = 0.5 * (1 - x);  // map [-1,1] -> [0,1], reversed is fine
        ws[size_t(i)] = 1.0 / ((1 - x * x) * dp * dp);
    }
}

}  // namespace

std::array<double, 3> ray_gauge_at(const FieldSystem& sys,
                                   const std::array<double, 3>& q) {
    CompiledContext ctx(sys.chart);
    std::array<CompiledNF, 3> B;
    for (int j = 0; j < 3; ++j)
        B[size_t(j)] = ctx.compile(normal_form(sys.B.comp[size_t(j)]));
    std::vector<double> xs, ws, slots;
    gauss_legendre(64, xs, ws);
    std::array<double, 3> C{0, 0, 0};
    for (size_t i = 0; i < xs.size(); ++i) {
        double tt = xs[i];
        std::array<double, 3> qt{tt * q[0], tt * q[1], tt * q[2]};
        ctx.fill(qt, slots);
        for (int j = 0; j < 3; ++j)
            C[size_t(j)] += ws[i] * tt * B[size_t(j)].eval(slots, 1e-300);
    }
    return {q[2] * C[1] - q[1] * C[2], q[0] * C[2] - q[2] * C[0],
            q[1] * C[0] - q[0] * C[1]};
}

SimulationSetup fig_preset(int which) {
    if (which != 1 && which != 2) throw ExprError("preset must be fig1 or fig2");
    ParamMap pm = {{"eps", Rat(-1)},   {"delta", Rat(1)},    {"c", Rat(2)},
                   {"alpha1", Rat(1)}, {"alpha2", Rat(1)},   {"beta1", Rat(-1, 5)},
                   {"beta2", Rat(-1, 7)}, {"omega1", Rat(-1)}, {"omega2", Rat(-1)}};
    SimulationSetup setup;
    setup.sys = build_system("ELLIPTIC_A_ZERO", pm);
    setup.sigma = -1;
    setup.t_end = which == 1 ? 150.0 : 50.0;
    setup.note =
        "printed initial momenta are taken in the ray gauge with the p - A "
        "covariant convention (the published trajectories follow it); the "
        "physical velocity v0 = p0 - A_ray(q0) is converted to canonical "
        "momenta of the simulation gauge";

    const double pi = 3.14159265358979323846;
    std::array<double, 3> q0{pi, -pi, which == 1 ? 0.0 : pi / 2};
    std::array<double, 3> p_printed{1.0, 0.0, 1.0};
    std::array<double, 3> Aray = ray_gauge_at(setup.sys, q0);
    std::array<double, 3> v0;
    for (int j = 0; j < 3; ++j) v0[size_t(j)] = p_printed[size_t(j)] - Aray[size_t(j)];

    EomEvaluator eom(setup.sys, setup.sigma);
    setup.ic.t = 0;
    setup.ic.q = q0;
    setup.ic.p = eom.momenta_for_velocity(q0, v0);
    return setup;
}

}  // namespace ifield
