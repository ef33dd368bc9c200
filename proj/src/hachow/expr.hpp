#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hachow {

// Small arithmetic expression tree shared by the field-literal and cycle-literal
// parsers. Numbers are exact rationals (decimal literals are read exactly).
struct Expr {
    enum class Kind { Number, Unit, Infinity, Variable, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Number;
    mpq_class number;
    std::string name;  // Variable
    long exponent = 0;  // Pow
    std::size_t position = 0;
    std::vector<std::unique_ptr<Expr>> args;
};

using ExprPtr = std::unique_ptr<Expr>;

// Parses a whole string as one expression. Identifiers other than i, w, inf are
// reported as variables; the caller decides which are legal.
ExprPtr parse_expression(std::string_view src);

// Parses the longest expression starting at `pos` and advances `pos` past it.
ExprPtr parse_expression_prefix(std::string_view src, std::size_t& pos);

}  // namespace hachow
