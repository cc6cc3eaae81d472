#pragma once

#include <functional>
#include <optional>

#include "ifield/catalog.hpp"
#include "ifield/compile.hpp"

namespace ifield {

struct PhaseState {
    double t = 0;
    std::array<double, 3> q{0, 0, 0};
    std::array<double, 3> p{0, 0, 0};
};

enum class Method { DormandPrince54, ImplicitMidpoint };

struct IntegrateOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double dt_out = 0.01;
    Method method = Method::DormandPrince54;
    double fixed_step = 1e-3;  // implicit midpoint
    long max_steps = 200'000'000;
    double guard = 1e-12;
    double z_escape_factor = 10.0;
};

struct IntegratorStats {
    long steps = 0;
    long rejected = 0;
    double rtol = 0, atol = 0;
};

struct Trajectory {
    std::vector<PhaseState> samples;
    std::vector<std::array<double, 3>> conserved;  // H, X1, X2 per sample
    IntegratorStats stats;
};

// Hamiltonian flow evaluator compiled from a numeric system. The covariant
// sign sigma selects between H = (1/2) sum (p_j + sigma A_j)^2 + W
// conventions (sigma = +1 is the formulation the integrals are written in).
class EomEvaluator {
  public:
    EomEvaluator(const FieldSystem& sys, int sigma);

    void rhs(const std::array<double, 6>& s, std::array<double, 6>& ds) const;
    std::array<double, 3> conserved(const std::array<double, 6>& s) const;
    double hamiltonian(const std::array<double, 6>& s) const;
    bool inside_exclusion(const std::array<double, 3>& q) const;
    // canonical momenta for a given physical velocity at q
    std::array<double, 3> momenta_for_velocity(const std::array<double, 3>& q,
                                               const std::array<double, 3>& v) const;
    int sigma() const { return sigma_; }

  private:
    mutable std::vector<double> slots_;
    CompiledContext ctx_;
    std::array<CompiledObservable, 6> rhs_;
    CompiledObservable h_, x1_, x2_;
    std::array<CompiledNF, 3> gauge_;
    double rho_min_ = 0;
    int sigma_ = 1;
    double guard_ = 1e-12;
};

Trajectory integrate(const EomEvaluator& eom, const PhaseState& ic, double t_end,
                     const IntegrateOptions& opts);

struct ConservationReport {
    std::array<double, 3> drift{0, 0, 0};          // at the requested tolerance
    std::array<double, 3> drift_tighter{0, 0, 0};  // at tolerance / 10
    std::array<double, 3> ratio{0, 0, 0};          // drift / drift_tighter

    std::string to_text() const;
};

ConservationReport conservation_report(const EomEvaluator& eom, const PhaseState& ic,
                                       double t_end, const IntegrateOptions& opts);

struct ZExtent {
    double z_min = 0, z_max = 0;
    bool escaping = false;
    std::string verdict() const { return escaping ? "ESCAPING" : "CONFINED"; }
};

ZExtent classify_z_extent(const Trajectory& traj, double z_escape_factor = 10.0);

// trajectory CSV: t,x,y,z,p1,p2,p3,H,X1,X2 at full double precision
std::string trajectory_csv(const Trajectory& traj);

// numeric ray-gauge vector potential of a compiled field at one point
std::array<double, 3> ray_gauge_at(const FieldSystem& sys,
                                   const std::array<double, 3>& q);

// figure presets: parameters, initial conditions and conventions that
// reproduce the published trajectory experiments
struct SimulationSetup {
    FieldSystem sys;
    PhaseState ic;
    double t_end = 0;
    int sigma = 1;
    std::string note;
};

SimulationSetup fig_preset(int which /* 1 or 2 */);

// SVG plot of 2D projections (xy, xz, t-z) and a gnuplot splot data block
std::string trajectory_svg(const Trajectory& traj);
std::string trajectory_gnuplot(const Trajectory& traj);

}  // namespace ifield
