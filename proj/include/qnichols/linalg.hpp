/**
 * @file linalg.hpp
 * @brief Small dense exact linear algebra over the rational function field
 *        Q(q), used for braiding matrices, kernels, and rank certificates.
 *
 * All routines are deterministic: pivots are chosen as the first nonzero
 * entry in row-major scan order, so echelon forms, kernels, and ranks are
 * reproducible across runs and platforms.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "qnichols/ratq.hpp"

namespace qnichols {

/// Dense matrix over Q(q), row major; all rows must have equal length.
using RatMat = std::vector<std::vector<RatQ>>;

/// n x n identity.
RatMat rat_identity(std::size_t n);

/// Zero matrix of the given shape.
RatMat rat_zeros(std::size_t rows, std::size_t cols);

/// Matrix product; throws InputError on shape mismatch.
RatMat rat_mul(const RatMat& a, const RatMat& b);

/// Entrywise sum; throws InputError on shape mismatch.
RatMat rat_add(const RatMat& a, const RatMat& b);

/// Entrywise difference; throws InputError on shape mismatch.
RatMat rat_sub(const RatMat& a, const RatMat& b);

/// Scalar multiple.
RatMat rat_scale(const RatMat& a, const RatQ& c);

/// Kronecker product: (a (x) b)[i*rb+k][j*cb+l] = a[i][j] * b[k][l].
RatMat rat_kron(const RatMat& a, const RatMat& b);

bool rat_is_zero(const RatMat& a);

/**
 * In-place reduced row echelon form with the deterministic pivot rule
 * "first row with a nonzero entry in the leftmost unsettled column".
 * Returns the pivot column indices in order.
 */
std::vector<std::size_t> rat_rref(RatMat& a);

std::size_t rat_rank(RatMat a);

/// Determinant of a square matrix; throws InputError if not square.
RatQ rat_det(RatMat a);

/**
 * Canonical basis of the null space { x : a x = 0 }: one vector per free
 * column in ascending column order, with entry 1 at its free column, the
 * solved values at pivot columns, and 0 at the other free columns.
 */
std::vector<std::vector<RatQ>> rat_kernel(const RatMat& a);

} // namespace qnichols
