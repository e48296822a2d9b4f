// Text syntax for polynomials: integer or rational coefficients, `*`, `^`,
// `+`, `-`, parentheses and the declared variable names, e.g.
// `x^2*y - 3/2*z`. Whitespace is ignored.

#ifndef LOGPOISSON_POLY_IO_HPP
#define LOGPOISSON_POLY_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "logpoisson/poly.hpp"

namespace logp {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    Poly parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return p;
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

    Poly expr() {
        Poly acc(names_.size());
        bool first = true;
        for (;;) {
            skip_ws();
            bool negate = false;
            if (accept('-')) {
                negate = true;
            } else if (accept('+')) {
            } else if (!first) {
                break;
            }
            Poly t = term();
            if (negate) t = -t;
            acc += t;
            first = false;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        while (accept('*')) acc *= power();
        return acc;
    }

    Poly power() {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            mpz_class e = integer();
            if (e > 1000) throw ParseError("exponent too large", start);
            Poly out = Poly::constant(names_.size(), 1);
            for (unsigned long i = 0; i < e.get_ui(); ++i) out *= base;
            return out;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(integer());
            if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                mpz_class den = integer();
                if (den == 0) throw ParseError("zero denominator", at);
                value /= Rational(den);
            }
            value.canonicalize();
            return Poly::constant(names_.size(), value);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t j = 0; j < names_.size(); ++j)
                if (names_[j] == name) return Poly::variable(names_.size(), j);
            throw ParseError("unknown variable '" + name + "'", start);
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    mpz_class integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", start);
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, const std::vector<std::string>& names) {
    return detail::PolyParser(text, names).parse();
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
        if (m[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += names.at(j);
        if (m[j] > 1) out += '^' + std::to_string(m[j]);
    }
    return out;
}

/// Terms in descending grlex order; parse_poly(to_string(f)) == f.
inline std::string to_string(const Poly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_to_string(m, names);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + '*' + mono;
        }
    }
    return out;
}

/// Default variable names: x, y, z for up to three variables, x0..x{n-1} otherwise.
inline std::vector<std::string> default_names(std::size_t n) {
    if (n <= 3) {
        std::vector<std::string> base{"x", "y", "z"};
        base.resize(n);
        return base;
    }
    std::vector<std::string> out;
    for (std::size_t j = 0; j < n; ++j) out.push_back("x" + std::to_string(j));
    return out;
}

}  // namespace logp

#endif  // LOGPOISSON_POLY_IO_HPP
