#pragma once

#include <string>

#include "ifield/expr.hpp"

namespace ifield {

class ParseError : public ExprError {
  public:
    ParseError(const std::string& what, size_t offset)
        : ExprError(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

// Parse the documented expression grammar (docs/grammar.md): infix + - * / ^
// with integer exponents, calls sin/cos/sinh/cosh/exp/sqrt, D(e, v, ...) for
// partial derivatives, and opaque function applications f(r), g(r, Z), ...
Expr parse_expr(const std::string& text);

std::string print_expr(const Expr& e);

}  // namespace ifield
