/**
 * @file intmat.hpp
 * @brief Exact integer matrices and lattice algorithms.
 *
 * Root-datum validation is lattice arithmetic: checking that maps between
 * free abelian groups are injective with free cokernel, inverting unimodular
 * base changes, and extracting integer kernels.  Everything here is exact
 * (GMP integers) and deterministic.
 *
 * Conventions:
 *  - matrices act on column vectors, entries are row-major;
 *  - smith_normal_form returns U, D, V with U*A*V = D, U and V unimodular,
 *    and the diagonal of D the elementary divisors d1 | d2 | ... | dr > 0;
 *  - integer_kernel_basis returns a basis of {v : A v = 0} normalized by
 *    row Hermite form, so equal kernels yield identical bases.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qnichols/errors.hpp"

namespace qnichols {

/// Dense matrix over Z.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(std::size_t n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    IntMat transposed() const;
    IntMat operator*(const IntMat& other) const;
    bool operator==(const IntMat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
    }
    bool operator!=(const IntMat& other) const { return !(*this == other); }

    /// Matrix-vector product A v.
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

    bool is_zero() const;

    /// Render as "[[1, 0], [2, 3]]" for diagnostics.
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> a_;
};

/// Result of the Smith decomposition U*A*V = D.
struct SmithForm {
    IntMat U;  ///< unimodular, rows() x rows() of A
    IntMat D;  ///< diagonal, same shape as A
    IntMat V;  ///< unimodular, cols() x cols() of A
    std::vector<mpz_class> divisors;  ///< positive diagonal entries, d1 | d2 | ...
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMat& A);

/// Exact determinant (Bareiss); throws InputError unless square.
mpz_class int_det(const IntMat& A);

std::size_t int_rank(const IntMat& A);

/// Square with determinant +-1.
bool is_unimodular(const IntMat& A);

/// Integral inverse of a unimodular matrix; throws InputError otherwise.
IntMat inverse_unimodular(const IntMat& A);

/**
 * Basis of the integer kernel {v in Z^cols : A v = 0}, one vector per entry.
 * Normalized via row Hermite form so the basis depends only on the kernel,
 * not on the elimination path.  Empty when the kernel is trivial.
 */
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& A);

/**
 * Row Hermite normal form with zero rows removed: pivots positive, strictly
 * to the right as rows descend, entries above each pivot reduced into
 * [0, pivot).
 */
IntMat hnf_rows(IntMat M);

} // namespace qnichols
