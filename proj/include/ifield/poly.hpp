#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ifield/symbols.hpp"

namespace ifield {

// Monomial: sorted (generator, exponent>0) pairs.
struct Monomial {
    std::vector<std::pair<int, int>> v;

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const { return v < o.v; }
    int exponent_of(int gen) const;
    bool is_one() const { return v.empty(); }
    Monomial times(const Monomial& o) const;
    // divides: whether this | o, and the quotient
    std::optional<Monomial> divide(const Monomial& den) const;
};

// Sparse multivariate polynomial over exact rationals.
class Poly {
  public:
    Poly() = default;
    static Poly constant(const Rat& c);
    static Poly gen(int g, int exp = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    const Rat* constant_value() const;  // nullptr unless constant (zero -> 0)

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Rat& c) const;
    Poly pow(int n) const;  // n >= 0
    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator<(const Poly& o) const { return t_ < o.t_; }

    // formal partial derivative with respect to one generator
    Poly derivative_wrt_gen(int g) const;

    int degree_in(int g) const;
    int total_degree() const;
    Poly coeff_of(int g, int k) const;  // coefficient of g^k (g removed)
    bool depends_on(int g) const { return degree_in(g) > 0; }
    std::vector<int> generators() const;

    // exact division; nullopt if it does not divide
    std::optional<Poly> divide_exact(const Poly& d) const;

    // normalize so the integer content is 1 and the leading coefficient is
    // positive; returns the extracted scalar s with *this == s * normalized
    Rat extract_scalar();

    void add_term(const Monomial& m, const Rat& c);
    const std::map<Monomial, Rat>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

  private:
    std::map<Monomial, Rat> t_;
};

// apply the registered quadratic side relations (sin^2 -> 1 - cos^2, etc.)
Poly reduce_relations(Poly p);

// polynomial-handle helpers backed by the symbol registry
int store_poly(const Poly& p);
const Poly& stored_poly(int handle);

// sqrt generator interning, keyed by radicand value
int intern_sqrt(const Poly& radicand);

}  // namespace ifield
