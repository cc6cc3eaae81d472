#pragma once

#include <functional>
#include <map>
#include <string>

#include "ifield/poly.hpp"

namespace ifield {

class EvalError : public std::runtime_error {
  public:
    explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// Numeric environment: generator id -> value for parameters and coordinates.
// Atom and sqrt generators are evaluated from their definitions; jet symbols
// cannot be evaluated.
struct EvalEnv {
    std::map<int, double> values;
    double guard = 1e-6;

    void set_param(const std::string& name, double v);
    void set_coord(Chart chart, int index, double v);
    void set(const std::string& name, double v);  // param or coordinate name
};

double eval_poly(const Poly& p, const EvalEnv& env);
double eval_gen(int gen, const EvalEnv& env);

std::string poly_to_string(const Poly& p);

// Canonical rational form: Laurent-monomial numerator polynomial over a
// product of composite denominator factors. Zero is the empty numerator.
// The quadratic side relations (sin^2 -> 1-cos^2, sinh^2 -> cosh^2-1,
// sqrt^2 -> radicand, registered parameter relations) are kept reduced at
// every step, with the fixed orientation eliminating sin/sinh/sqrt powers.
class NormalForm {
  public:
    NormalForm() = default;
    explicit NormalForm(Poly p) : num_(reduce_relations(std::move(p))) {}
    NormalForm(const Rat& c) : num_(Poly::constant(c)) {}
    NormalForm(int i) : num_(Poly::constant(Rat(i))) {}
    static NormalForm gen(int g, int exp = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool equals(const NormalForm& o) const { return (*this - o).is_zero(); }
    const Poly& num() const { return num_; }
    const std::map<Poly, int>& den() const { return den_; }
    bool den_trivial() const { return den_.empty(); }

    NormalForm operator-() const;
    NormalForm operator+(const NormalForm& o) const;
    NormalForm operator-(const NormalForm& o) const;
    NormalForm operator*(const NormalForm& o) const;
    NormalForm operator/(const NormalForm& o) const;
    NormalForm& operator+=(const NormalForm& o) { return *this = *this + o; }
    NormalForm& operator-=(const NormalForm& o) { return *this = *this - o; }
    NormalForm pow(int n) const;

    // partial derivative with respect to a coordinate generator (chain rule
    // through atoms, sqrt generators and jet symbols)
    NormalForm derivative(int coord_gen) const;

    double eval(const EvalEnv& env) const;

    // substitute a generator (parameter or coordinate) by a normal form;
    // atoms referencing a substituted coordinate are rejected unless the
    // substitution keeps their argument linear (handled by the Expr layer)
    NormalForm substitute_gen(int gen, const NormalForm& value) const;

    bool depends_on_gen(int gen) const;
    std::vector<int> all_generators() const;

    // clear denominators: returns numerator after multiplying by all factors
    // (used by tests that compare cleared forms)
    const Poly& cleared_numerator() const { return num_; }

    std::string to_string() const;

  private:
    void push_den_factor(Poly f, int mult);
    void cancel();
    NormalForm mul_mono_inverse(const Monomial& m) const;

    Poly num_;
    std::map<Poly, int> den_;
};

NormalForm param_nf(const std::string& name);
NormalForm coord_nf(Chart chart, int index);
NormalForm param_mono_nf(const ParamMono& mu);

// exact limit as a parameter tends to zero: requires the denominator factors
// to be independent of the parameter and no surviving negative powers in the
// numerator; the limit is then the parameter-free part
NormalForm limit_param_to_zero(const NormalForm& nf, int param_gen);

// derivative of a single generator with respect to a coordinate generator
NormalForm gen_derivative(int gen, int coord_gen);

}  // namespace ifield
