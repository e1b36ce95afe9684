#include "riordan/series_expr.hpp"

#include <cctype>
#include <string>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// Recursive-descent evaluator; every node is evaluated directly as a
// Series at the requested order.
class Parser {
public:
    Parser(std::string_view text, int order) : text_(text), order_(order) {}

    Series run() {
        Series r = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "' at position " +
                             std::to_string(pos_));
        return r;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos_));
    }

    Series expr() {
        Series r = term();
        for (;;) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    Series term() {
        Series r = unary();
        for (;;) {
            if (accept('*')) {
                r = r * unary();
            } else if (accept('/')) {
                r = r * inverse(unary());
            } else {
                return r;
            }
        }
    }

    Series unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Series power() {
        Series base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == start)
                throw ParseError("expected a nonnegative integer exponent at position " +
                                 std::to_string(pos_));
            const long e = std::stol(std::string(text_.substr(start, pos_ - start)));
            return pow(base, e);
        }
        return base;
    }

    Series atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Series r = expr();
            expect(')');
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Series::constant(number(), order_);
        if (c == 'x') {
            ++pos_;
            return order_ >= 1 ? Series::x(order_) : Series(0);
        }
        if (text_.substr(pos_, 4) == "sqrt") {
            pos_ += 4;
            expect('(');
            Series r = expr();
            expect(')');
            return sqrt(r);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "' at position " +
                         std::to_string(pos_));
    }

    // digits ('/' digits)?; signs are handled by unary().
    Rational number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::size_t end = pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // A fraction only if digits follow; otherwise leave '/' to term().
            std::size_t probe = pos_ + 1;
            std::size_t den_start = probe;
            while (probe < text_.size() && std::isdigit(static_cast<unsigned char>(text_[probe]))) ++probe;
            if (probe > den_start) {
                pos_ = probe;
                end = probe;
            }
        }
        return Rational::parse(text_.substr(start, end - start));
    }

    std::string_view text_;
    int order_;
    std::size_t pos_ = 0;
};

}  // namespace

Series parse_series_expr(std::string_view text, int order) {
    if (order < 0) throw ParseError("order must be nonnegative");
    return Parser(text, order).run();
}

}  // namespace riordan
