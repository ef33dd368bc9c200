#include "hachow/expr.hpp"

#include "hachow/errors.hpp"

#include <cctype>

namespace hachow {

namespace {

class Parser {
public:
    Parser(std::string_view src, std::size_t pos) : src_(src), pos_(pos) {}

    ExprPtr expression() {
        ExprPtr lhs = term();
        for (;;) {
            skip();
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            std::size_t at = pos_++;
            ExprPtr rhs = term();
            lhs = binary(c == '+' ? Expr::Kind::Add : Expr::Kind::Sub, std::move(lhs), std::move(rhs), at);
        }
    }

    std::size_t position() const { return pos_; }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

private:
    ExprPtr term() {
        ExprPtr lhs = unary();
        for (;;) {
            skip();
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            std::size_t at = pos_++;
            ExprPtr rhs = unary();
            lhs = binary(c == '*' ? Expr::Kind::Mul : Expr::Kind::Div, std::move(lhs), std::move(rhs), at);
        }
    }

    ExprPtr unary() {
        skip();
        char c = peek();
        if (c == '-' || c == '+') {
            std::size_t at = pos_++;
            ExprPtr inner = unary();
            if (c == '+') return inner;
            auto e = std::make_unique<Expr>();
            e->kind = Expr::Kind::Neg;
            e->position = at;
            e->args.push_back(std::move(inner));
            return e;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        skip();
        if (peek() != '^') return base;
        std::size_t at = pos_++;
        skip();
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
            skip();
        }
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip();
        }
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        if (pos_ - start > 9) throw ParseError("exponent too large", start);
        long n = std::stol(std::string(src_.substr(start, pos_ - start)));
        if (paren) {
            skip();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
        }
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Pow;
        e->exponent = negative ? -n : n;
        e->position = at;
        e->args.push_back(std::move(base));
        return e;
    }

    ExprPtr primary() {
        skip();
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            ExprPtr inner = expression();
            skip();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string id(src_.substr(at, pos_ - at));
            auto e = std::make_unique<Expr>();
            e->position = at;
            if (id == "i" || id == "w") {
                e->kind = Expr::Kind::Unit;
                e->name = id;
            } else if (id == "inf" || id == "oo") {
                e->kind = Expr::Kind::Infinity;
            } else {
                e->kind = Expr::Kind::Variable;
                e->name = id;
            }
            return e;
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr number() {
        std::size_t at = pos_;
        std::string digits;
        std::size_t frac = 0;
        bool dot = false;
        while (std::isdigit(static_cast<unsigned char>(peek())) || (!dot && peek() == '.')) {
            if (peek() == '.') {
                dot = true;
            } else {
                digits.push_back(peek());
                if (dot) ++frac;
            }
            ++pos_;
        }
        if (digits.empty()) throw ParseError("malformed number", at);
        mpz_class num(digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        auto e = std::make_unique<Expr>();
        e->kind = Expr::Kind::Number;
        e->number = mpq_class(num, den);
        e->number.canonicalize();
        e->position = at;
        return e;
    }

    static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b, std::size_t at) {
        auto e = std::make_unique<Expr>();
        e->kind = k;
        e->position = at;
        e->args.push_back(std::move(a));
        e->args.push_back(std::move(b));
        return e;
    }

    std::string_view src_;
    std::size_t pos_;
};

}  // namespace

ExprPtr parse_expression(std::string_view src) {
    Parser p(src, 0);
    ExprPtr e = p.expression();
    p.skip();
    if (p.position() != src.size()) throw ParseError("trailing input", p.position());
    return e;
}

ExprPtr parse_expression_prefix(std::string_view src, std::size_t& pos) {
    Parser p(src, pos);
    ExprPtr e = p.expression();
    pos = p.position();
    return e;
}

}  // namespace hachow
