#include "vallab/parse.hpp"

#include <cctype>

namespace vallab {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void err(const std::string& what) {
        fail(errc::parse_error, what + " at position " + std::to_string(i) + " in '" + s + "'");
    }

    Integer integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) err("expected integer");
        return Integer(s.substr(start, i - start));
    }

    // unsigned rational "a" or "a/b" (the sign is handled by the term parser)
    Rational coefficient() {
        Integer n = integer();
        size_t save = i;
        if (eat('/')) {
            skip_ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                Integer d = integer();
                if (sgn(d) == 0) err("zero denominator");
                return Rational(n, d);
            }
            i = save; // the '/' belongs to an enclosing rational function
        }
        return Rational(n);
    }

    bool at_var() {
        char c = peek();
        return c == 'X' || c == 'x';
    }

    // X or X^k; returns the exponent
    long var_power() {
        if (!at_var()) err("expected X");
        ++i;
        if (eat('^')) {
            Integer e = integer();
            if (sgn(e) < 0 || !e.fits_slong_p()) err("bad exponent");
            return e.get_si();
        }
        return 1;
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    Cursor c{text};
    Poly result;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            c.err("expected '+' or '-'");
        }
        first = false;

        Rational coeff(1);
        long deg = 0;
        if (c.at_var()) {
            deg = c.var_power();
        } else {
            coeff = c.coefficient();
            size_t save = c.i;
            bool star = c.eat('*');
            if (c.at_var()) {
                deg = c.var_power();
            } else if (star) {
                c.i = save;
                c.err("expected X after '*'");
            }
        }
        if (sign < 0) coeff = -coeff;
        result += Poly::monomial(deg, coeff);
    }
    if (first) fail(errc::parse_error, "empty polynomial '" + text + "'");
    return result;
}

} // namespace vallab
