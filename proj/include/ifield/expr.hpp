#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ifield/normal_form.hpp"

namespace ifield {

enum class NodeKind { Num, Sym, Add, Mul, Pow, Quot, Call, JetCall };

enum class CallFn { Sin, Cos, Sinh, Cosh, Exp, Sqrt };

struct ExprNode;

// Immutable expression tree. Cheap to copy; structural value semantics.
class Expr {
  public:
    Expr();  // zero
    static Expr number(const Rat& c);
    static Expr integer(long v) { return number(Rat(v)); }
    static Expr symbol(const std::string& name);  // coordinate or parameter
    static Expr symbol_gen(int gen);
    static Expr call(CallFn fn, Expr arg);
    static Expr jet(const std::string& func, Chart chart,
                    const std::array<bool, 3>& deps, const std::array<int, 3>& deriv);

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    Expr operator/(const Expr& o) const;
    Expr operator-() const;
    Expr pow(int n) const;

    const ExprNode& node() const { return *n_; }
    bool is_zero_literal() const;

  private:
    explicit Expr(std::shared_ptr<const ExprNode> n) : n_(std::move(n)) {}
    std::shared_ptr<const ExprNode> n_;
    friend Expr make_expr(ExprNode&& node);
};

struct ExprNode {
    NodeKind kind;
    Rat num;                 // Num
    int sym = -1;            // Sym: parameter or coordinate generator
    std::vector<Expr> kids;  // Add, Mul, Quot(2), Call(1)
    int ipow = 0;            // Pow exponent (any integer)
    CallFn fn = CallFn::Sin;
    // JetCall
    std::string jet_func;
    Chart jet_chart = Chart::Cartesian;
    std::array<bool, 3> jet_deps{false, false, false};
    std::array<int, 3> jet_deriv{0, 0, 0};
};

Expr make_expr(ExprNode&& node);

// --- spec operations -------------------------------------------------------

// exact partial derivative; parameters are constants
Expr differentiate(const Expr& e, const std::string& coord);
Expr differentiate(const Expr& e, int coord_gen);

// simultaneous substitution of parameters/coordinates (by name) and jet
// functions (by function name; derivatives applied to the replacement)
Expr substitute(const Expr& e, const std::map<std::string, Expr>& bindings);

double eval_numeric(const Expr& e, const EvalEnv& env);

NormalForm normal_form(const Expr& e);

// rebuild a printable expression from a normal form
Expr to_expr(const NormalForm& nf);

bool is_symbolically_zero(const Expr& e);

}  // namespace ifield
