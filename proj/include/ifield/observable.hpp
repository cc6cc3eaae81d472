#pragma once

#include <map>

#include "ifield/forms.hpp"

namespace ifield {

struct MomIdx {
    std::array<int, 3> e{0, 0, 0};

    int total() const { return e[0] + e[1] + e[2]; }
    bool operator<(const MomIdx& o) const { return e < o.e; }
    bool operator==(const MomIdx& o) const = default;
};

enum class Momenta { Canonical, Covariant };

// Polynomial in the three momenta with NormalForm coefficients. In covariant
// presentation the momenta mean p_j + A_j; in canonical presentation they are
// the chart's canonical momenta.
class Observable {
  public:
    Chart chart = Chart::Cartesian;
    Momenta pres = Momenta::Covariant;
    std::map<MomIdx, NormalForm> coef;

    void add(const MomIdx& m, const NormalForm& c);
    const NormalForm& at(const MomIdx& m) const;  // zero if absent

    Observable operator+(const Observable& o) const;
    Observable operator-(const Observable& o) const;
    Observable operator*(const Observable& o) const;
    Observable scaled(const NormalForm& c) const;
    Observable operator-() const { return scaled(NormalForm(Rat(-1))); }

    int degree() const;
    bool is_zero() const;
    void prune();

    // coefficient-wise coordinate derivative
    Observable derivative_q(int coord_gen) const;
    // momentum derivative (index shift)
    Observable derivative_p(int j) const;

    // value at a numeric phase point (q, p); canonical concrete coefficients
    double eval(const std::array<double, 6>& pt, double guard = 1e-6) const;

    // p -> -p (maps integrals of H(p+A) to integrals of H(p-A))
    Observable momentum_reflected() const;
};

Observable obs_zero(Chart chart, Momenta pres);
Observable obs_scalar(Chart chart, const NormalForm& v, Momenta pres);
Observable obs_momentum(Chart chart, int j, Momenta pres);
// angular momentum l_j = sum eps_jkl q_k P_l (Cartesian chart)
Observable obs_angular(int j, Momenta pres);

// H = (1/2) sum_j (P_j)^2 + W in Cartesian, or
// (1/2)(P_r^2 + P_phi^2/r^2 + P_Z^2) + W in cylindrical; covariant form
Observable hamiltonian_observable(Chart chart, const Expr& W);

// exact canonical point transformation x = r cos phi, y = r sin phi, z = Z
// with the cotangent lift of the momenta (works for either presentation)
Observable to_cylindrical(const Observable& cart);

// covariant -> canonical with the gauge A: P_j = p_j + sigma*A_j
Observable to_canonical(const Observable& obs, const OneForm& A, int sigma = 1);

// leading-order second-degree constants of an integral (alpha/beta/gamma of
// the quadratic e(3) ansatz) together with the first-order functions
struct IntegralSpec {
    Chart chart = Chart::Cartesian;
    std::map<std::pair<int, int>, Expr> alpha;  // l_i l_j, i <= j
    std::map<std::pair<int, int>, Expr> beta;   // p_i l_j
    std::map<std::pair<int, int>, Expr> gamma;  // p_i p_j, i <= j
    std::array<Expr, 3> s{Expr(), Expr(), Expr()};
    Expr m;

    bool leading_is_zero() const { return alpha.empty() && beta.empty() && gamma.empty(); }
};

// X = sum alpha l l + sum beta p l + sum gamma p p + s . P + m (covariant)
Observable build_observable(const IntegralSpec& spec);

}  // namespace ifield
