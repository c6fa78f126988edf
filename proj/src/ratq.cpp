/**
 * @file ratq.cpp
 * @brief Canonical rational-function arithmetic and exact q-combinatorics.
 */
#include "qnichols/ratq.hpp"

namespace qnichols {

RatQ::RatQ(const LaurentQ& n, const LaurentQ& d) : num_(n), den_(d) {
    if (d.is_zero()) throw InputError("rational function with zero denominator");
    canon();
}

void RatQ::canon() {
    if (num_.is_zero()) {
        den_ = LaurentQ::one();
        return;
    }
    LaurentQ g = lq_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = lq_exact_div(num_, g);
        den_ = lq_exact_div(den_, g);
    }
    // Normalize the denominator by a unit c*q^k: lowest exponent 0, monic.
    long k = den_.min_exp();
    mpq_class lead = den_.leading_coeff();
    num_ = num_.shifted(-k) * (1 / lead);
    den_ = den_.shifted(-k) * (1 / lead);
}

RatQ& RatQ::operator+=(const RatQ& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canon();
    return *this;
}

RatQ& RatQ::operator-=(const RatQ& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canon();
    return *this;
}

RatQ& RatQ::operator*=(const RatQ& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canon();
    return *this;
}

RatQ& RatQ::operator/=(const RatQ& o) {
    if (o.is_zero()) throw InputError("division by zero in Q(q)");
    num_ *= o.den_;
    den_ *= o.num_;
    canon();
    return *this;
}

RatQ RatQ::operator-() const {
    RatQ r(*this);
    r.num_ = -r.num_;
    return r;
}

RatQ RatQ::inverse() const {
    if (is_zero()) throw InputError("inverse of zero in Q(q)");
    RatQ r;
    r.num_ = den_;
    r.den_ = num_;
    r.canon();
    return r;
}

mpq_class RatQ::eval(const mpq_class& q0) const {
    mpq_class d = den_.eval(q0);
    if (d == 0) throw InputError("denominator vanishes at evaluation point");
    return num_.eval(q0) / d;
}

std::string RatQ::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::optional<RatQ> ratq_sqrt(const RatQ& a) {
    auto n = lq_sqrt(a.num());
    if (!n) return std::nullopt;
    auto d = lq_sqrt(a.den());
    if (!d) {
        // The canonical denominator need not be a square even when a is one
        // (e.g. a = x/y with x = s^2*y); retry on num*den / den^2.
        n = lq_sqrt(a.num() * a.den());
        if (!n) return std::nullopt;
        return RatQ(*n, a.den());
    }
    return RatQ(*n, *d);
}

LaurentQ q_int(long a, long c) {
    if (c <= 0) throw InputError("q_int: c must be positive");
    if (a == 0) return LaurentQ::zero();
    if (a < 0) return -q_int(-a, c);
    // [a] = q_i^(a-1) + q_i^(a-3) + ... + q_i^-(a-1)
    LaurentQ r;
    for (long t = 0; t < a; ++t) r += LaurentQ::q_power(c * (a - 1 - 2 * t));
    return r;
}

LaurentQ q_factorial(long a, long c) {
    if (a < 0) throw InputError("q_factorial: negative argument");
    LaurentQ r = LaurentQ::one();
    for (long t = 2; t <= a; ++t) r *= q_int(t, c);
    return r;
}

LaurentQ q_binom(long a, long t, long c) {
    if (t < 0 || t > a) throw InputError("q_binom: need 0 <= t <= a");
    // Product formula prod_{s=1..t} [a-s+1]/[s], kept exact by dividing a
    // Laurent-polynomial numerator by a Laurent-polynomial denominator.
    LaurentQ numer = LaurentQ::one(), denom = LaurentQ::one();
    for (long s = 1; s <= t; ++s) {
        numer *= q_int(a - s + 1, c);
        denom *= q_int(s, c);
    }
    return lq_exact_div(numer, denom);
}

LaurentQ q_gap(long c) {
    if (c <= 0) throw InputError("q_gap: c must be positive");
    return LaurentQ::q_power(c) - LaurentQ::q_power(-c);
}

} // namespace qnichols
