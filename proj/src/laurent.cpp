/**
 * @file laurent.cpp
 * @brief Implementation of exact Laurent-polynomial arithmetic.
 */
#include "qnichols/laurent.hpp"

#include <sstream>

namespace qnichols {

LaurentQ LaurentQ::monomial(const mpq_class& c, long e) {
    LaurentQ r;
    if (c != 0) r.c_[e] = c;
    return r;
}

bool LaurentQ::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

long LaurentQ::min_exp() const {
    if (is_zero()) throw InputError("min_exp of zero Laurent polynomial");
    return c_.begin()->first;
}

long LaurentQ::max_exp() const {
    if (is_zero()) throw InputError("max_exp of zero Laurent polynomial");
    return c_.rbegin()->first;
}

mpq_class LaurentQ::coeff(long e) const {
    auto it = c_.find(e);
    return it == c_.end() ? mpq_class(0) : it->second;
}

const mpq_class& LaurentQ::leading_coeff() const {
    if (is_zero()) throw InputError("leading_coeff of zero Laurent polynomial");
    return c_.rbegin()->second;
}

void LaurentQ::add_term(long e, const mpq_class& v) {
    if (v == 0) return;
    auto [it, inserted] = c_.emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) {
    if (is_zero() || o.is_zero()) { c_.clear(); return *this; }
    Coeffs out;
    for (const auto& [ea, va] : c_) {
        for (const auto& [eb, vb] : o.c_) {
            mpq_class prod = va * vb;
            auto [it, inserted] = out.emplace(ea + eb, prod);
            if (!inserted) it->second += prod;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it); else ++it;
    }
    c_ = std::move(out);
    return *this;
}

LaurentQ& LaurentQ::operator*=(const mpq_class& s) {
    if (s == 0) { c_.clear(); return *this; }
    for (auto& [e, v] : c_) v *= s;
    return *this;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r(*this);
    for (auto& [e, v] : r.c_) v = -v;
    return r;
}

LaurentQ LaurentQ::shifted(long k) const {
    LaurentQ r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

LaurentQ LaurentQ::bar() const {
    LaurentQ r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

LaurentQ LaurentQ::pow(unsigned long n) const {
    LaurentQ acc = one(), base = *this;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

mpq_class LaurentQ::eval(const mpq_class& q0) const {
    mpq_class acc = 0;
    for (const auto& [e, v] : c_) {
        mpq_class p = 1;
        long a = e >= 0 ? e : -e;
        mpq_class base = q0;
        if (e < 0) {
            if (q0 == 0) throw InputError("evaluating negative q-power at 0");
            base = 1 / q0;
        }
        for (long t = 0; t < a; ++t) p *= base;
        acc += v * p;
    }
    return acc;
}

namespace {

std::string coeff_str(const mpq_class& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

} // namespace

std::string LaurentQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    // Highest exponent first, matching the usual handwritten convention.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        mpq_class v = it->second;
        bool neg = v < 0;
        if (first) {
            if (neg) { out += "-"; v = -v; }
        } else {
            out += neg ? " - " : " + ";
            if (neg) v = -v;
        }
        first = false;
        long e = it->first;
        if (e == 0) {
            out += coeff_str(v);
        } else {
            if (v != 1) { out += coeff_str(v); out += "*"; }
            out += "q";
            if (e != 1) { out += "^"; out += std::to_string(e); }
        }
    }
    return out;
}

void lq_divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& quot, LaurentQ& rem) {
    if (b.is_zero()) throw InputError("division by zero Laurent polynomial");
    quot = LaurentQ::zero();
    if (a.is_zero()) { rem = LaurentQ::zero(); return; }
    // Work with the polynomial parts (lowest exponent shifted to 0).
    long sa = a.min_exp(), sb = b.min_exp();
    LaurentQ r = a.shifted(-sa);
    LaurentQ d = b.shifted(-sb);
    long degd = d.max_exp();
    LaurentQ q;
    while (!r.is_zero() && r.max_exp() >= degd) {
        mpq_class c = r.leading_coeff() / d.leading_coeff();
        long e = r.max_exp() - degd;
        LaurentQ t = LaurentQ::monomial(c, e);
        q += t;
        r -= t * d;
    }
    quot = q.shifted(sa - sb);
    rem = r.shifted(sa);
}

LaurentQ lq_exact_div(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ q, r;
    lq_divmod(a, b, q, r);
    if (!r.is_zero()) throw ConsistencyError("inexact Laurent division");
    return q;
}

LaurentQ lq_gcd(LaurentQ a, LaurentQ b) {
    auto canon = [](const LaurentQ& x) {
        if (x.is_zero()) return x;
        LaurentQ y = x.shifted(-x.min_exp());
        mpq_class inv = 1 / y.leading_coeff();
        return y * inv;
    };
    a = canon(a);
    b = canon(b);
    while (!b.is_zero()) {
        LaurentQ q, r;
        lq_divmod(a, b, q, r);
        a = b;
        b = canon(r);
    }
    return canon(a);
}

std::optional<LaurentQ> lq_sqrt(const LaurentQ& a) {
    if (a.is_zero()) return LaurentQ::zero();
    long lo = a.min_exp(), hi = a.max_exp();
    if ((lo % 2 + 2) % 2 != 0 || (hi % 2 + 2) % 2 != 0) return std::nullopt;
    // Work on the polynomial part and match coefficients from the top down:
    // if a = (sum_{k<=d} s_k q^k)^2 then s_d^2 is the leading coefficient and
    // each lower s_k is determined linearly by the already-known ones.
    LaurentQ p = a.shifted(-lo);
    long d = (hi - lo) / 2;
    mpq_class lead = p.leading_coeff();
    // Rational square root: numerator and denominator must be perfect squares.
    mpz_class nr, dr;
    if (mpz_perfect_square_p(lead.get_num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(lead.get_den().get_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(nr.get_mpz_t(), lead.get_num().get_mpz_t());
    mpz_sqrt(dr.get_mpz_t(), lead.get_den().get_mpz_t());
    mpq_class slead(nr, dr);
    slead.canonicalize();

    LaurentQ s = LaurentQ::monomial(slead, d);
    LaurentQ rem = p - s * s;
    for (long k = d - 1; k >= 0; --k) {
        // Coefficient of q^(k+d) in rem must equal 2*slead*s_k.
        mpq_class c = rem.coeff(k + d) / (2 * slead);
        if (c != 0) {
            LaurentQ t = LaurentQ::monomial(c, k);
            rem -= s * t * mpq_class(2) + t * t;
            s += t;
        }
    }
    if (!rem.is_zero()) return std::nullopt;
    return s.shifted(lo / 2);
}

} // namespace qnichols
