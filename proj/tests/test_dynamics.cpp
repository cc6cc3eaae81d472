#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ifield/dynamics.hpp"

using namespace ifield;

namespace {

// free motion as a degenerate catalog entry: LIMIT_STANDARD with everything 0
FieldSystem free_motion() {
    return build_system("LIMIT_STANDARD",
                        {{"beta1t", Rat(0)}, {"b", Rat(1)}, {"beta2", Rat(0)},
                         {"omega1", Rat(0)}, {"omega2", Rat(0)}, {"omega3", Rat(0)}});
}

// constant B3 = B0 with W = 0 (pure Larmor), built ad hoc for the tests
FieldSystem larmor(const std::string& b3) {
    FieldSystem sys;
    sys.id = "LARMOR_TEST";
    sys.anchor = "test field";
    sys.chart = Chart::Cartesian;
    sys.symbolic = false;
    sys.B = make_two_form(Chart::Cartesian, "0", "0", b3);
    sys.W = Expr();
    sys.gauge = poincare_gauge(sys.B);
    IntegralSpec X1;  // p3
    X1.s = {Expr(), Expr(), Expr::integer(1)};
    IntegralSpec X2;  // l3 (canonical, since l3^A - B0 rho^2/2 shifts by gauge)
    X2.s = {parse_expr("-y"), parse_expr("x"), Expr()};
    X2.m = parse_expr("-(" + b3 + ")*(x^2 + y^2)/2");
    sys.integrals = {X1, X2};
    return sys;
}

std::array<double, 3> max_element_drift(const Trajectory& traj) {
    std::array<double, 3> d{0, 0, 0};
    auto c0 = traj.conserved.front();
    for (auto& c : traj.conserved)
        for (int i = 0; i < 3; ++i)
            d[size_t(i)] = std::max(d[size_t(i)],
                                    std::fabs(c[size_t(i)] - c0[size_t(i)]) /
                                        std::max(1.0, std::fabs(c0[size_t(i)])));
    return d;
}

void build_then_eom_symbolic() {
    FieldSystem sys = build_system("ELLIPTIC_A_NONZERO");
    EomEvaluator eom(sys, +1);
}

}  // namespace

TEST_CASE("free motion: q(t) = q0 + p t, drifts at rounding level") {
    FieldSystem sys = free_motion();
    EomEvaluator eom(sys, +1);
    PhaseState ic;
    ic.q = {0.1, -0.2, 0.05};
    ic.p = {1.0, 0.0, 1.0};
    IntegrateOptions opts;
    Trajectory traj = integrate(eom, ic, 10.0, opts);
    const PhaseState& end = traj.samples.back();
    CHECK(end.t == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(end.q[0] == doctest::Approx(0.1 + 10.0).epsilon(1e-10));
    CHECK(end.q[2] == doctest::Approx(0.05 + 10.0).epsilon(1e-10));
    auto d = conservation_report(eom, ic, 10.0, opts);
    for (int i = 0; i < 3; ++i) CHECK(d.drift[i] < 1e-12);
    ZExtent ze = classify_z_extent(traj);
    CHECK(ze.escaping);  // p3 = 1 walks z past 10x the initial window
    PhaseState flat = ic;
    flat.p = {1.0, 0.0, 0.0};
    ZExtent zc = classify_z_extent(integrate(eom, flat, 10.0, opts));
    CHECK(!zc.escaping);
}

TEST_CASE("Larmor orbit: radius constant to 1e-8 over a period") {
    // B = (0,0,B0), W = 0, symmetric gauge; physical velocity v = (v0, 0, 0)
    // gives a circle of radius v0/B0 around (x0, y0 - v0/B0) for sigma=+1
    double B0 = 2.0;
    FieldSystem sys = larmor("2");
    EomEvaluator eom(sys, +1);
    std::array<double, 3> q0{1.0, 1.0, 0.0};
    std::array<double, 3> v0{0.5, 0.0, 0.0};
    PhaseState ic;
    ic.q = q0;
    ic.p = eom.momenta_for_velocity(q0, v0);
    double period = 2 * M_PI / B0;
    IntegrateOptions opts;
    opts.rtol = 1e-12;
    opts.atol = 1e-14;
    Trajectory traj = integrate(eom, ic, period, opts);
    // center and radius from the Newtonian solution v' = -v x B
    double rl = 0.5 / B0;
    double cx = q0[0], cy = q0[1] - rl;
    for (size_t i = 0; i < traj.samples.size(); i += 7) {
        auto& s = traj.samples[i];
        double rad = std::hypot(s.q[0] - cx, s.q[1] - cy);
        CHECK(std::fabs(rad - rl) < 1e-8);
    }
    // closes after one period
    auto& e = traj.samples.back();
    CHECK(std::fabs(e.q[0] - q0[0]) < 1e-8);
    CHECK(std::fabs(e.q[1] - q0[1]) < 1e-8);
}

TEST_CASE("EOM matches finite differences of compiled H") {
    SimulationSetup setup = fig_preset(2);
    EomEvaluator eom(setup.sys, setup.sigma);
    std::array<double, 6> s{0.4, -1.1, 0.7, 0.3, -0.2, 0.9}, ds;
    eom.rhs(s, ds);
    double h = 1e-6;
    for (int i = 0; i < 6; ++i) {
        auto sp = s, sm = s;
        sp[size_t(i)] += h;
        sm[size_t(i)] -= h;
        double grad = (eom.hamiltonian(sp) - eom.hamiltonian(sm)) / (2 * h);
        double expect = i < 3 ? -ds[size_t(i + 3)] : ds[size_t(i - 3)];
        CHECK(grad == doctest::Approx(expect).epsilon(1e-6));
    }
}

TEST_CASE("implicit midpoint converges at second order on the Larmor test") {
    FieldSystem sys = larmor("2");
    EomEvaluator eom(sys, +1);
    std::array<double, 3> q0{1.0, 1.0, 0.0};
    PhaseState ic;
    ic.q = q0;
    ic.p = eom.momenta_for_velocity(q0, {0.5, 0.0, 0.0});
    double T = 2 * M_PI / 2.0;
    auto endpoint_error = [&](double hstep) {
        IntegrateOptions opts;
        opts.method = Method::ImplicitMidpoint;
        opts.fixed_step = hstep;
        opts.dt_out = T;  // endpoint only
        Trajectory t = integrate(eom, ic, T, opts);
        auto& e = t.samples.back();
        return std::hypot(e.q[0] - q0[0], e.q[1] - q0[1]);
    };
    double e1 = endpoint_error(1e-3);
    double e2 = endpoint_error(5e-4);
    double ratio = e1 / e2;
    CHECK(ratio > 3.4);
    CHECK(ratio < 4.6);
}

TEST_CASE("fig1 escapes, fig2 confined, conservation < 1e-8 at rtol 1e-10") {
    SimulationSetup f1 = fig_preset(1);
    SimulationSetup f2 = fig_preset(2);
    EomEvaluator e1(f1.sys, f1.sigma);
    EomEvaluator e2(f2.sys, f2.sigma);
    IntegrateOptions opts;
    opts.rtol = 1e-10;
    opts.atol = 1e-12;

    Trajectory t1 = integrate(e1, f1.ic, f1.t_end, opts);
    Trajectory t2 = integrate(e2, f2.ic, f2.t_end, opts);
    ZExtent z1 = classify_z_extent(t1, opts.z_escape_factor);
    ZExtent z2 = classify_z_extent(t2, opts.z_escape_factor);
    INFO("fig1 z: [", z1.z_min, ", ", z1.z_max, "]");
    INFO("fig2 z: [", z2.z_min, ", ", z2.z_max, "]");
    CHECK(z1.escaping);
    CHECK(!z2.escaping);
    double w1 = z1.z_max - z1.z_min, w2 = z2.z_max - z2.z_min;
    CHECK(w1 > 5 * w2);
    // expected windows from the independent reference integration
    CHECK(w1 > 200.0);
    CHECK(z1.z_max == doctest::Approx(283.56).epsilon(0.05));
    CHECK(z2.z_max == doctest::Approx(13.45).epsilon(0.02));

    auto d1 = max_element_drift(t1);
    auto d2 = max_element_drift(t2);
    for (int i = 0; i < 3; ++i) {
        CHECK(d1[size_t(i)] < 1e-8);
        CHECK(d2[size_t(i)] < 1e-8);
    }
}

TEST_CASE("adaptive endpoint agreement between rtol 1e-10 and 1e-11") {
    SimulationSetup f1 = fig_preset(1);
    EomEvaluator eom(f1.sys, f1.sigma);
    IntegrateOptions a;
    a.rtol = 1e-10;
    a.atol = 1e-12;
    a.dt_out = 50.0;
    IntegrateOptions b = a;
    b.rtol = 1e-11;
    b.atol = 1e-13;
    Trajectory ta = integrate(eom, f1.ic, 50.0, a);
    Trajectory tb = integrate(eom, f1.ic, 50.0, b);
    auto& ea = ta.samples.back();
    auto& eb = tb.samples.back();
    double scale = 0;
    for (int i = 0; i < 3; ++i) scale = std::max(scale, std::fabs(eb.q[size_t(i)]));
    double diff = 0;
    for (int i = 0; i < 3; ++i)
        diff = std::max(diff, std::fabs(ea.q[size_t(i)] - eb.q[size_t(i)]));
    CHECK(diff / scale < 1e-7);
}

TEST_CASE("gauge independence of trajectories") {
    // CLASS_III under the symmetric gauge vs a shifted gauge: q(t) agrees
    FieldSystem sys = build_system("CLASS_III", {{"bphi", Rat(1)}, {"w0", Rat(1, 2)}});
    FieldSystem sys2 = sys;
    sys2.gauge = gauge_shift(*sys.gauge, parse_expr("x^2*y - 3*z*x"));
    EomEvaluator e1(sys, +1), e2(sys2, +1);
    std::array<double, 3> q0{1.2, 0.3, 0.0}, v0{0.2, 0.4, 0.1};
    PhaseState ic1, ic2;
    ic1.q = ic2.q = q0;
    ic1.p = e1.momenta_for_velocity(q0, v0);
    ic2.p = e2.momenta_for_velocity(q0, v0);
    IntegrateOptions opts;
    Trajectory t1 = integrate(e1, ic1, 10.0, opts);
    Trajectory t2 = integrate(e2, ic2, 10.0, opts);
    REQUIRE(t1.samples.size() == t2.samples.size());
    for (size_t i = 0; i < t1.samples.size(); i += 13) {
        for (int j = 0; j < 3; ++j)
            CHECK(std::fabs(t1.samples[i].q[size_t(j)] - t2.samples[i].q[size_t(j)]) <
                  1e-7);
    }
}

TEST_CASE("negative control: perturbed W breaks X1 conservation") {
    SimulationSetup f2 = fig_preset(2);
    FieldSystem broken = f2.sys;
    broken.W = broken.W + parse_expr("x/100");
    EomEvaluator eom(broken, f2.sigma);
    IntegrateOptions opts;
    Trajectory t = integrate(eom, f2.ic, 10.0, opts);
    auto d = max_element_drift(t);
    CHECK(d[0] < 1e-9);   // H still conserved (it includes the perturbation)
    CHECK(d[1] > 1e-6);   // X1 visibly drifts
}

TEST_CASE("trajectory CSV format") {
    FieldSystem sys = free_motion();
    EomEvaluator eom(sys, +1);
    PhaseState ic;
    ic.p = {1, 0, 0};
    IntegrateOptions opts;
    opts.dt_out = 0.5;
    Trajectory t = integrate(eom, ic, 1.0, opts);
    std::string csv = trajectory_csv(t);
    CHECK(csv.rfind("t,x,y,z,p1,p2,p3,H,X1,X2\n", 0) == 0);
    CHECK(csv.find("\r") == std::string::npos);
    std::string csv2 = trajectory_csv(integrate(eom, ic, 1.0, opts));
    CHECK(csv == csv2);  // byte-identical reruns
    CHECK(trajectory_svg(t).rfind("<svg", 0) == 0);
    CHECK(trajectory_gnuplot(t).find("splot") != std::string::npos);
}

TEST_CASE("integration guards") {
    FieldSystem sys = build_system("CLASS_III", {{"bphi", Rat(1)}, {"w0", Rat(1)}});
    EomEvaluator eom(sys, +1);
    PhaseState on_axis;
    on_axis.q = {0.0, 0.0, 0.0};
    IntegrateOptions opts;
    CHECK_THROWS_AS(integrate(eom, on_axis, 1.0, opts), ExprError);
    CHECK_THROWS_AS(build_then_eom_symbolic(), ExprError);
}
