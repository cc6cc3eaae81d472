#include "ifield/parser.hpp"

#include <cctype>
#include <sstream>

namespace ifield {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    Expr parse() {
        Expr e = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return e;
    }

    Expr expr() {
        Expr e = term();
        for (;;) {
            if (eat('+')) {
                e = e + term();
            } else if (eat('-')) {
                e = e - term();
            } else {
                return e;
            }
        }
    }

    Expr term() {
        Expr e = unary();
        for (;;) {
            if (eat('*')) {
                e = e * unary();
            } else if (eat('/')) {
                e = e / unary();
            } else {
                return e;
            }
        }
    }

    Expr unary() {
        int sign = 1;
        for (;;) {
            if (eat('-')) {
                sign = -sign;
            } else if (eat('+')) {
            } else {
                break;
            }
        }
        Expr e = power();
        return sign < 0 ? -e : e;
    }

    Expr power() {
        Expr base = primary();
        if (eat('^')) {
            bool neg = eat('-');
            long k = integer();
            return base.pow(int(neg ? -k : k));
        }
        return base;
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    Expr primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Expr::number(Rat(integer()));
        if (c == '(') {
            ++pos;
            Expr e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (peek() != '(') return Expr::symbol(name);
            if (name == "D") return derivative_call();
            ++pos;  // '('
            if (name == "sin" || name == "cos" || name == "sinh" || name == "cosh" ||
                name == "exp" || name == "sqrt") {
                Expr arg = expr();
                if (!eat(')')) fail("expected ')'");
                CallFn fn = name == "sin"    ? CallFn::Sin
                            : name == "cos"  ? CallFn::Cos
                            : name == "sinh" ? CallFn::Sinh
                            : name == "cosh" ? CallFn::Cosh
                            : name == "exp"  ? CallFn::Exp
                                             : CallFn::Sqrt;
                Expr call = Expr::call(fn, arg);
                try {
                    normal_form(call);  // reject nonlinear atom arguments here
                } catch (const ExprError& err) {
                    fail(err.what());
                }
                return call;
            }
            return jet_call(name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Expr derivative_call() {
        eat('(');
        Expr e = expr();
        std::vector<std::string> vars;
        while (eat(',')) vars.push_back(ident());
        if (!eat(')')) fail("expected ')'");
        if (vars.empty()) fail("D(...) needs at least one variable");
        for (auto& v : vars) {
            if (!Symbols::instance().is_coordinate_name(v))
                fail("D variable must be a coordinate: " + v);
            e = differentiate(e, v);
        }
        return e;
    }

    Expr jet_call(const std::string& name) {
        auto& S = Symbols::instance();
        std::array<bool, 3> deps{false, false, false};
        Chart chart = Chart::Cartesian;
        bool chart_set = false;
        for (;;) {
            std::string arg = ident();
            if (!S.is_coordinate_name(arg))
                fail("opaque function argument must be a coordinate: " + arg);
            int cg = S.coord_by_name(arg);
            const GenInfo& gi = S.info(cg);
            if (chart_set && gi.chart != chart)
                fail("opaque function mixes charts: " + name);
            chart = gi.chart;
            chart_set = true;
            deps[size_t(gi.coord_index)] = true;
            if (eat(')')) break;
            if (!eat(',')) fail("expected ',' or ')'");
        }
        return Expr::jet(name, chart, deps, {0, 0, 0});
    }
};

// --- printer ------------------------------------------------------------

// precedence: 1 add, 2 mul, 3 unary-ish, 4 pow, 5 atom
void pr(std::ostream& os, const Expr& e, int parent_prec);

void pr_call(std::ostream& os, const ExprNode& n) {
    const char* names[] = {"sin", "cos", "sinh", "cosh", "exp", "sqrt"};
    os << names[int(n.fn)] << "(";
    pr(os, n.kids[0], 0);
    os << ")";
}

void pr_jet(std::ostream& os, const ExprNode& n) {
    std::ostringstream inner;
    inner << n.jet_func << "(";
    bool first = true;
    for (int k = 0; k < 3; ++k) {
        if (!n.jet_deps[size_t(k)]) continue;
        if (!first) inner << ",";
        first = false;
        inner << chart_coord_name(n.jet_chart, k);
    }
    inner << ")";
    int nderiv = n.jet_deriv[0] + n.jet_deriv[1] + n.jet_deriv[2];
    if (nderiv == 0) {
        os << inner.str();
        return;
    }
    os << "D(" << inner.str();
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < n.jet_deriv[size_t(k)]; ++j)
            os << "," << chart_coord_name(n.jet_chart, k);
    os << ")";
}

void pr(std::ostream& os, const Expr& e, int parent_prec) {
    const ExprNode& n = e.node();
    switch (n.kind) {
        case NodeKind::Num: {
            bool neg = n.num < 0;
            bool frac = n.num.get_den() != 1;
            int prec = neg ? 1 : (frac ? 2 : 5);
            bool paren = prec < parent_prec;
            if (paren) os << "(";
            os << n.num.get_num();
            if (frac) os << "/" << n.num.get_den();
            if (paren) os << ")";
            return;
        }
        case NodeKind::Sym:
            os << Symbols::instance().info(n.sym).name;
            return;
        case NodeKind::Add: {
            bool paren = parent_prec > 1;
            if (paren) os << "(";
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) os << " + ";
                pr(os, n.kids[i], 1);
            }
            if (paren) os << ")";
            return;
        }
        case NodeKind::Mul: {
            bool paren = parent_prec > 2;
            if (paren) os << "(";
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) os << "*";
                pr(os, n.kids[i], 3);
            }
            if (paren) os << ")";
            return;
        }
        case NodeKind::Quot: {
            bool paren = parent_prec > 2;
            if (paren) os << "(";
            pr(os, n.kids[0], 3);
            os << "/";
            pr(os, n.kids[1], 4);
            if (paren) os << ")";
            return;
        }
        case NodeKind::Pow: {
            bool paren = parent_prec > 4;
            if (paren) os << "(";
            pr(os, n.kids[0], 5);
            os << "^" << n.ipow;
            if (paren) os << ")";
            return;
        }
        case NodeKind::Call:
            pr_call(os, n);
            return;
        case NodeKind::JetCall:
            pr_jet(os, n);
            return;
    }
}

}  // namespace

Expr parse_expr(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    pr(os, e, 0);
    return os.str();
}

}  // namespace ifield
