#include "subc/parser.hpp"

#include <cctype>

namespace subc {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars), n_(static_cast<int>(vars.size())) {}

    PolyQ run() {
        skip_ws();
        PolyQ p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    PolyQ parse_expr() {
        bool neg = false;
        skip_ws();
        if (peek() == '+' || peek() == '-') neg = (text_[pos_++] == '-');
        PolyQ acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            PolyQ t = parse_term();
            if (c == '-') acc -= t;
            else acc += t;
        }
        return acc;
    }

    PolyQ parse_term() {
        PolyQ acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            acc *= parse_factor();
        }
        return acc;
    }

    PolyQ parse_factor() {
        skip_ws();
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '(') {
            ++pos_;
            PolyQ p = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        fail("expected number, variable or '('");
        return PolyQ(n_);
    }

    PolyQ parse_number() {
        std::string num = read_digits();
        std::string den;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected denominator digits");
            den = read_digits();
        }
        Rational r = Rational::from_string(den.empty() ? num : num + "/" + den);
        return PolyQ::constant(n_, r);
    }

    PolyQ parse_variable() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            name += text_[pos_++];
        int idx = -1;
        for (int i = 0; i < n_; ++i)
            if (vars_[i] == name) { idx = i; break; }
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        int exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("expected positive integer exponent");
            exp = std::stoi(read_digits());
            if (exp <= 0) fail("exponent must be positive");
        }
        Exponents e(n_, 0);
        e[idx] = exp;
        return PolyQ::monomial(n_, std::move(e), Rational(1));
    }

    std::string read_digits() {
        std::string s;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            s += text_[pos_++];
        return s;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyQ parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

}  // namespace subc
