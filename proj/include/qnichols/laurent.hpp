/**
 * @file laurent.hpp
 * @brief Laurent polynomials in one variable q with exact rational coefficients.
 *
 * LaurentQ is the coefficient workhorse of the whole library: elements of
 * Z[q, q^-1] (and more generally Q[q, q^-1]) with GMP rationals as
 * coefficients, so quantum integers and Gaussian binomials never overflow.
 *
 * Representation: a sorted map exponent -> coefficient containing no explicit
 * zeros, which makes equality structural.  Division, gcd and square roots are
 * provided in the "polynomial up to a unit" sense: units of Q[q, q^-1] are the
 * nonzero monomials c*q^k, and canonical forms fix them (lowest exponent 0,
 * leading coefficient 1).
 */
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "qnichols/errors.hpp"

namespace qnichols {

/// Exact Laurent polynomial in q over the rationals.
class LaurentQ {
public:
    using Coeffs = std::map<long, mpq_class>;

    /// Zero polynomial.
    LaurentQ() = default;

    /// Constant polynomial.
    explicit LaurentQ(long c) { if (c != 0) c_[0] = c; }
    explicit LaurentQ(const mpq_class& c) { if (c != 0) c_[0] = c; }

    /// c * q^e.
    static LaurentQ monomial(const mpq_class& c, long e);
    /// q^e.
    static LaurentQ q_power(long e) { return monomial(1, e); }
    static LaurentQ zero() { return LaurentQ(); }
    static LaurentQ one() { return LaurentQ(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    /// Lowest/highest exponent with nonzero coefficient.  Precondition: nonzero.
    long min_exp() const;
    long max_exp() const;

    /// Coefficient of q^e (zero if absent).
    mpq_class coeff(long e) const;
    /// Coefficient of the highest-exponent term.  Precondition: nonzero.
    const mpq_class& leading_coeff() const;

    const Coeffs& coeffs() const { return c_; }
    std::size_t term_count() const { return c_.size(); }

    LaurentQ& operator+=(const LaurentQ& o);
    LaurentQ& operator-=(const LaurentQ& o);
    LaurentQ& operator*=(const LaurentQ& o);
    LaurentQ& operator*=(const mpq_class& s);
    LaurentQ operator-() const;

    friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
    friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
    friend LaurentQ operator*(LaurentQ a, const LaurentQ& b) { return a *= b; }
    friend LaurentQ operator*(LaurentQ a, const mpq_class& s) { return a *= s; }

    bool operator==(const LaurentQ& o) const { return c_ == o.c_; }
    bool operator!=(const LaurentQ& o) const { return !(*this == o); }

    /// Multiply by q^k.
    LaurentQ shifted(long k) const;
    /// Substitute q -> q^-1 (the bar involution on coefficients).
    LaurentQ bar() const;
    /// Non-negative integer power.
    LaurentQ pow(unsigned long n) const;

    /// Exact evaluation at a nonzero rational point (oracle for tests).
    /// @throws InputError if q0 == 0 and a negative exponent is present.
    mpq_class eval(const mpq_class& q0) const;

    /// Rendering such as "q^2 - 2 + 3/2*q^-1"; "0" for zero.  The output is
    /// accepted back by the element expression parser.
    std::string str() const;

private:
    Coeffs c_;
    void add_term(long e, const mpq_class& v);
    friend LaurentQ lq_mul_add(const LaurentQ&, const LaurentQ&);
};

/// Polynomial division with remainder, treating both arguments as polynomials
/// after shifting their lowest exponents to zero: a = b*quot + rem with
/// deg rem < deg b (in the shifted sense).  Precondition: b nonzero.
void lq_divmod(const LaurentQ& a, const LaurentQ& b, LaurentQ& quot, LaurentQ& rem);

/// Exact Laurent division a / b (throws ConsistencyError if not divisible).
LaurentQ lq_exact_div(const LaurentQ& a, const LaurentQ& b);

/// Greatest common divisor up to units, returned in canonical form: lowest
/// exponent 0 and leading coefficient 1.  lq_gcd(0, 0) == 0.
LaurentQ lq_gcd(LaurentQ a, LaurentQ b);

/// Square root if the argument is a perfect square in Q[q, q^-1].
std::optional<LaurentQ> lq_sqrt(const LaurentQ& a);

} // namespace qnichols
