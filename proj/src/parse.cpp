#include "sepvars/parse.hpp"

#include <cctype>

namespace sepvars {

ParseError::ParseError(int line_, int column_, const std::string& what)
    : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                         std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    MPoly parse() {
        skip_ws();
        MPoly r = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& text_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (pos_ >= text_.size()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    MPoly expression() {
        bool negate = accept('-');
        MPoly r = term();
        if (negate) r = -r;
        while (true) {
            skip_ws();
            if (peek() == '+') {
                advance();
                r = r + term();
            } else if (peek() == '-') {
                advance();
                r = r - term();
            } else {
                return r;
            }
        }
    }

    MPoly term() {
        MPoly r = factor();
        while (accept('*')) r = r * factor();
        // implicit multiplication is rejected: a factor must be followed by
        // an operator, a closing parenthesis, or the end of input
        skip_ws();
        const char c = peek();
        if (c != '\0' && c != '+' && c != '-' && c != ')' && c != ';' && c != '*')
            fail(std::string("unexpected '") + c + "' (implicit multiplication?)");
        return r;
    }

    MPoly factor() {
        MPoly b = base();
        skip_ws();
        if (peek() == '^') {
            advance();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            const Int e = integer_literal();
            if (e > 4096) fail("exponent too large");
            return b.pow(e.get_ui());
        }
        return b;
    }

    Int integer_literal() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty()) fail("expected integer");
        return Int(digits);
    }

    MPoly base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            advance();
            MPoly r = expression();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            advance();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Int num = integer_literal();
            skip_ws();
            if (peek() == '/') {
                advance();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected positive denominator");
                const Int den = integer_literal();
                if (den == 0) fail("zero denominator");
                return MPoly::constant(vars_, frac(num, den));
            }
            return MPoly::constant(vars_, Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const int at_line = line_, at_col = col_;
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
                name += peek();
                advance();
            }
            for (size_t v = 0; v < vars_.size(); ++v)
                if (vars_[v] == name) return MPoly::variable(vars_, static_cast<int>(v));
            throw ParseError(at_line, at_col, "unknown variable '" + name + "'");
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
    }
};

}  // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

std::vector<MPoly> parse_poly_list(const std::string& text,
                                   const std::vector<std::string>& vars) {
    std::vector<MPoly> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        const std::string piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t\r\n") != std::string::npos)
            out.push_back(parse_poly(piece, vars));
        start = end + 1;
    }
    return out;
}

}  // namespace sepvars
