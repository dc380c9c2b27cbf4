#pragma once

// Integer polynomials in X from text:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*'? unary)*        implicit product before 'X' or '('
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' digits)?
//   atom   := digits | 'X' | 'x' | '(' expr ')'

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "poly.hpp"
#include "series.hpp"

namespace psf {

struct Expression {
    IntPoly coeffs; // ascending, trimmed

    std::string render() const { return render_poly(coeffs); }
    friend bool operator==(const Expression&, const Expression&) = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(Errc code, const std::string& what, std::size_t pos)
        : Error(code, what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

inline constexpr unsigned long kMaxExponent = 1u << 16;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    IntPoly parse() {
        IntPoly v = expr();
        skip();
        if (i_ < s_.size()) error("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& msg, Errc code = Errc::SyntaxError) const { throw SyntaxError(code, msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    IntPoly expr() {
        IntPoly v = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++i_;
                v = poly::add(v, term());
            } else if (c == '-') {
                ++i_;
                v = poly::sub(v, term());
            } else {
                return v;
            }
        }
    }

    IntPoly term() {
        IntPoly v = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++i_;
                v = poly::mul(v, unary());
            } else if (c == 'X' || c == 'x' || c == '(') {
                v = poly::mul(v, unary());
            } else if (c == '/') {
                error("division is not allowed in a polynomial", Errc::NonPolynomial);
            } else {
                return v;
            }
        }
    }

    IntPoly unary() {
        const char c = peek();
        if (c == '-') {
            ++i_;
            return poly::scale(unary(), -1);
        }
        if (c == '+') {
            ++i_;
            return unary();
        }
        return power();
    }

    IntPoly power() {
        IntPoly base = atom();
        if (peek() != '^') return base;
        ++i_;
        if (peek() == '-') error("negative exponent", Errc::NonPolynomial);
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) error("exponent must be a nonnegative integer");
        const Integer e = digits();
        if (e > kMaxExponent) error("exponent too large");
        IntPoly r{Integer(1)};
        for (unsigned long k = e.get_ui(); k > 0; --k) r = poly::mul(r, base);
        return r;
    }

    IntPoly atom() {
        const char c = peek();
        if (c == '(') {
            ++i_;
            IntPoly v = expr();
            if (peek() != ')') error("expected ')'");
            ++i_;
            return v;
        }
        if (c == 'X' || c == 'x') {
            ++i_;
            return {Integer(0), Integer(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return poly::trimmed({digits()});
        if (c == '\0') error("unexpected end of input");
        error("unexpected '" + std::string(1, c) + "'");
    }

    Integer digits() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline Expression parse_expression(std::string_view s) { return {detail::Parser(s).parse()}; }

} // namespace psf
