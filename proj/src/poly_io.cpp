#include "contactlab/poly_io.hpp"

#include <algorithm>
#include <cctype>

#include "contactlab/errors.hpp"

namespace contactlab {

const std::vector<std::string>& grammar_variables() {
    static const std::vector<std::string> vars = {"x0", "x1", "x2", "y0",
                                                  "y1", "y2", "s",  "t"};
    return vars;
}

namespace {

// Recursive-descent parser. Offsets reported to the user are 1-based.
class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& allowed)
        : text_(text), allowed_(allowed) {}

    MultiPoly run() {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    MultiPoly expression() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = power();
        while (eat('*')) acc *= power();
        return acc;
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (eat('^')) {
            unsigned e = exponent_literal();
            base = base.pow(e);
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expression();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly(rational_literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail(std::string("unexpected character '") + c + "'");
    }

    Rat rational_literal() {
        mpz_class num = integer_literal();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected denominator");
            mpz_class den = integer_literal();
            if (den == 0) fail("zero denominator");
            return Rat(mpq_class(num, den));
        }
        return Rat(std::move(num));
    }

    mpz_class integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    unsigned exponent_literal() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        mpz_class e = integer_literal();
        if (e > 64) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    MultiPoly variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (std::find(allowed_.begin(), allowed_.end(), name) == allowed_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return MultiPoly::variable(name);
    }

    const std::string& text_;
    const std::vector<std::string>& allowed_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const std::string& text) { return parse_poly(text, grammar_variables()); }

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& allowed_vars) {
    return Parser(text, allowed_vars).run();
}

}  // namespace contactlab
