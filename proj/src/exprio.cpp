#include "qnichols/exprio.hpp"

#include <cctype>

#include "qnichols/errors.hpp"

namespace qnichols {

namespace {

struct Parser {
    const UqEngine& eng;
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("expression parse error at offset " +
                         std::to_string(pos) + ": " + what);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    mpz_class integer() {
        skip_ws();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        const std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == digits) fail("expected an integer");
        return mpz_class(s.substr(start, pos - start));
    }

    long small_int() {
        const mpz_class v = integer();
        if (!v.fits_slong_p()) fail("integer out of range");
        return v.get_si();
    }

    UElement expr() {
        UElement acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos;
                acc += term();
            } else if (c == '-') {
                ++pos;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    UElement term() {
        UElement acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos;
                acc = eng.multiply(acc, factor());
            } else if (c == '/') {
                ++pos;
                const UElement d = factor();
                const auto sc = as_scalar(d);
                if (!sc || sc->is_zero())
                    fail("division is only defined by a nonzero scalar");
                acc *= sc->inverse();
            } else {
                return acc;
            }
        }
    }

    UElement factor() {
        const char c = peek();
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (c == '+') {
            ++pos;
            return factor();
        }
        UElement base = primary();
        if (peek() == '^') {
            ++pos;
            return power(base, small_int());
        }
        return base;
    }

    UElement power(const UElement& base, long n) {
        if (n == 0) return eng.one();
        if (n > 0) {
            UElement acc = base;
            for (long t = 1; t < n; ++t) acc = eng.multiply(acc, base);
            return acc;
        }
        const UElement inv = invert(base);
        UElement acc = inv;
        for (long t = 1; t < -n; ++t) acc = eng.multiply(acc, inv);
        return acc;
    }

    UElement invert(const UElement& x) {
        if (const auto sc = as_scalar(x)) {
            if (sc->is_zero()) fail("cannot invert zero");
            return eng.scalar(sc->inverse());
        }
        if (x.term_count() == 1) {
            const auto& [w, c] = *x.terms().begin();
            if (w.f.empty() && w.e.empty()) {
                KVec neg = w.k;
                for (long& v : neg) v = -v;
                UElement r = eng.K(neg);
                r *= c.inverse();
                return r;
            }
        }
        fail("negative powers require a scalar or K-monomial base");
    }

    UElement primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            UElement x = expr();
            expect(')');
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return eng.scalar(RatQ(mpq_class(integer())));
        if (c == 'q') {
            ++pos;
            return eng.scalar(RatQ::q_power(1));
        }
        if (c == 'F' || c == 'E') {
            ++pos;
            expect('[');
            const long i = small_int();
            expect(']');
            if (i < 1 || static_cast<std::size_t>(i) > eng.rank())
                fail("generator index out of range");
            const std::size_t node = static_cast<std::size_t>(i) - 1;
            return c == 'F' ? eng.F(node) : eng.E(node);
        }
        if (c == 'K') {
            ++pos;
            expect('[');
            KVec kv;
            if (peek() != ']') {
                kv.push_back(small_int());
                while (eat(',')) kv.push_back(small_int());
            }
            expect(']');
            if (kv.size() != eng.rank())
                fail("K exponent vector has the wrong length");
            return eng.K(kv);
        }
        fail("unexpected character");
    }
};

} // namespace

UElement parse_expression(const UqEngine& eng, const std::string& text) {
    Parser p{eng, text};
    UElement x = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return x;
}

std::optional<RatQ> as_scalar(const UElement& x) {
    if (x.is_zero()) return RatQ();
    if (x.term_count() != 1) return std::nullopt;
    const auto& [w, c] = *x.terms().begin();
    if (!w.is_one()) return std::nullopt;
    return c;
}

} // namespace qnichols
