#pragma once

// Text polynomials such as "t^7 - t - 1", "3/2*t^2 + 5", "(t-1)*(t^6+t+1)".
// Grammar (one variable, 't' or 'x'):
//   expr   := term (('+'|'-') term)*
//   term   := unary (['*'] unary)*          juxtaposition multiplies
//   unary  := ('-'|'+') unary | power
//   power  := atom ('^' integer)?
//   atom   := number ['/' number] | var | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"
#include "unipoly.hpp"

namespace quartic_forge {

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    UniPoly parse() {
        skip_ws();
        if (pos_ == text_.size()) fail("empty polynomial");
        UniPoly result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[nodiscard]] char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    UniPoly expr() {
        UniPoly acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    static bool starts_atom(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || is_var(c);
    }
    static bool is_var(char c) { return c == 't' || c == 'x'; }

    UniPoly term() {
        UniPoly acc = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= unary();
            } else if (starts_atom(c)) {
                acc *= unary();
            } else {
                return acc;
            }
        }
    }

    UniPoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    UniPoly power() {
        UniPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) fail("expected exponent");
            if (digits.size() > 4) fail("exponent too large");
            int e = std::stoi(digits);
            UniPoly result = UniPoly::constant(1);
            for (int i = 0; i < e; ++i) result *= base;
            return result;
        }
        return base;
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    UniPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            UniPoly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (is_var(c)) {
            if (var_ == '\0') var_ = c;
            if (c != var_) fail("mixed variable names");
            ++pos_;
            return UniPoly::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int(read_digits());
            Int den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string d = read_digits();
                if (d.empty()) fail("expected denominator");
                den = parse_int(d);
                if (den == 0) fail("zero denominator");
            }
            return UniPoly::constant(Rat(num, den));
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char var_ = '\0';
};

}  // namespace detail

inline UniPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace quartic_forge
