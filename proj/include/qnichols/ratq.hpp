/**
 * @file ratq.hpp
 * @brief The field Q(q) of rational functions in q, plus q-combinatorics.
 *
 * RatQ values are kept in a canonical form so that equality is structural:
 *  - numerator and denominator are coprime in Q[q, q^-1] (gcd reduced),
 *  - the denominator is a genuine polynomial with lowest exponent 0 and
 *    leading coefficient 1 (monic),
 *  - zero is represented as 0/1.
 *
 * The q-combinatorics follow the "balanced" conventions used for quantized
 * enveloping algebras: with q_i = q^c (c a positive integer),
 *
 *   [a]_i  = (q_i^a - q_i^-a) / (q_i - q_i^-1)   (quantum integer)
 *   [a]_i! = [a]_i [a-1]_i ... [1]_i             (quantum factorial)
 *   [a choose t]_i = [a]_i! / ([t]_i! [a-t]_i!)  (Gaussian binomial)
 *
 * All three are honest Laurent polynomials with integer coefficients; they
 * are computed exactly (the binomial via an exact product/division formula).
 */
#pragma once

#include <optional>
#include <string>

#include "qnichols/laurent.hpp"

namespace qnichols {

/// Exact rational function in q, canonical form as described in the file header.
class RatQ {
public:
    /// Zero.
    RatQ() : num_(), den_(LaurentQ::one()) {}
    RatQ(long c) : num_(c), den_(LaurentQ::one()) {}
    RatQ(const mpq_class& c) : num_(c), den_(LaurentQ::one()) {}
    RatQ(const LaurentQ& n) : num_(n), den_(LaurentQ::one()) {}
    /// n / d.  @throws InputError if d == 0.
    RatQ(const LaurentQ& n, const LaurentQ& d);

    static RatQ q_power(long e) { return RatQ(LaurentQ::q_power(e)); }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// True when the denominator is trivial, i.e. the value is a Laurent polynomial.
    bool is_laurent() const { return den_.is_one(); }

    bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatQ& o) const { return !(*this == o); }

    RatQ& operator+=(const RatQ& o);
    RatQ& operator-=(const RatQ& o);
    RatQ& operator*=(const RatQ& o);
    RatQ& operator/=(const RatQ& o);
    RatQ operator-() const;

    friend RatQ operator+(RatQ a, const RatQ& b) { return a += b; }
    friend RatQ operator-(RatQ a, const RatQ& b) { return a -= b; }
    friend RatQ operator*(RatQ a, const RatQ& b) { return a *= b; }
    friend RatQ operator/(RatQ a, const RatQ& b) { return a /= b; }

    /// Multiplicative inverse.  @throws InputError on zero.
    RatQ inverse() const;

    /// Exact evaluation at a rational point.
    /// @throws InputError if the denominator vanishes there.
    mpq_class eval(const mpq_class& q0) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)"; both parts
    /// use LaurentQ::str and parse back through the expression grammar.
    std::string str() const;

private:
    LaurentQ num_, den_;
    void canon();
};

/// Square root in Q(q) when it exists.
std::optional<RatQ> ratq_sqrt(const RatQ& a);

/// Quantum integer [a]_i as a Laurent polynomial; c is the positive integer
/// with q_i = q^c.  Defined for all a in Z ([-a] = -[a], [0] = 0).
LaurentQ q_int(long a, long c);

/// Quantum factorial [a]_i!.  Precondition: a >= 0.
LaurentQ q_factorial(long a, long c);

/// Gaussian binomial [a choose t]_i.  Precondition: 0 <= t <= a.
LaurentQ q_binom(long a, long t, long c);

/// q_i - q_i^-1, the denominator appearing in the E/F commutation relation.
LaurentQ q_gap(long c);

} // namespace qnichols
