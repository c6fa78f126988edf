/**
 * @file intmat.cpp
 * @brief Integer matrix algorithms: Smith form, Hermite form, Bareiss
 *        determinant, kernels, unimodular inverses.
 *
 * The matrices arising from root data are tiny (rank <= 8), so the classic
 * textbook algorithms are more than fast enough; the priority is exactness
 * and determinism, both of which GMP plus a fixed pivoting rule provide.
 */
#include "qnichols/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace qnichols {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw InputError("matrix rows have unequal lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& other) const {
    if (cols_ != other.rows_)
        throw InputError("matrix product shape mismatch: " +
                         std::to_string(cols_) + " vs " +
                         std::to_string(other.rows_));
    IntMat p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += x * other.at(k, j);
        }
    return p;
}

std::vector<mpz_class> IntMat::apply(const std::vector<mpz_class>& v) const {
    if (v.size() != cols_)
        throw InputError("matrix-vector shape mismatch: " +
                         std::to_string(cols_) + " vs " +
                         std::to_string(v.size()));
    std::vector<mpz_class> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const mpz_class& x) { return x == 0; });
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

/// row[a] -= f * row[b]
void addmul_row(IntMat& m, std::size_t a, const mpz_class& f, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) -= f * m.at(b, j);
}

/// col[a] -= f * col[b]
void addmul_col(IntMat& m, std::size_t a, const mpz_class& f, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) -= f * m.at(i, b);
}

void negate_row(IntMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(a, j) = -m.at(a, j);
}

} // namespace

SmithForm smith_normal_form(const IntMat& A) {
    SmithForm sf;
    sf.U = IntMat::identity(A.rows());
    sf.V = IntMat::identity(A.cols());
    sf.D = A;
    IntMat& D = sf.D;
    const std::size_t m = A.rows(), n = A.cols();

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Pivot choice: smallest nonzero absolute value in the trailing
            // block, ties broken by position — fixed rule for determinism.
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (D.at(i, j) == 0) continue;
                    if (pi == m || mpz_cmpabs(D.at(i, j).get_mpz_t(),
                                              D.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                // Trailing block vanished: done with the whole matrix.
                sf.rank = t;
                for (std::size_t k = 0; k < t; ++k)
                    sf.divisors.push_back(D.at(k, k));
                return sf;
            }
            swap_rows(D, t, pi);
            swap_rows(sf.U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(sf.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), D.at(i, t).get_mpz_t(),
                           D.at(t, t).get_mpz_t());
                addmul_row(D, i, f, t);
                addmul_row(sf.U, i, f, t);
                if (D.at(i, t) != 0) clean = false;  // remainder shrank
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), D.at(t, j).get_mpz_t(),
                           D.at(t, t).get_mpz_t());
                addmul_col(D, j, f, t);
                addmul_col(sf.V, j, f, t);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: d_t must divide every trailing entry.
            std::size_t bi = m;
            for (std::size_t i = t + 1; i < m && bi == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < m) {
                // Fold the offending row into row t and restart the cycle.
                addmul_row(D, t, mpz_class(-1), bi);
                addmul_row(sf.U, t, mpz_class(-1), bi);
                continue;
            }
            if (D.at(t, t) < 0) {
                negate_row(D, t);
                negate_row(sf.U, t);
            }
            break;
        }
    }
    sf.rank = 0;
    for (std::size_t k = 0; k < std::min(m, n); ++k)
        if (D.at(k, k) != 0) {
            sf.divisors.push_back(D.at(k, k));
            ++sf.rank;
        }

    if (sf.U * A * sf.V != D)
        throw ConsistencyError("Smith decomposition failed to verify");
    return sf;
}

mpz_class int_det(const IntMat& A) {
    if (A.rows() != A.cols()) throw InputError("determinant of non-square matrix");
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    IntMat M = A;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

std::size_t int_rank(const IntMat& A) { return smith_normal_form(A).rank; }

bool is_unimodular(const IntMat& A) {
    if (A.rows() != A.cols()) return false;
    mpz_class d = int_det(A);
    return d == 1 || d == -1;
}

IntMat inverse_unimodular(const IntMat& A) {
    if (!is_unimodular(A))
        throw InputError("matrix is not unimodular: " + A.str());
    SmithForm sf = smith_normal_form(A);
    // U A V = I, hence A^{-1} = V U.
    return sf.V * sf.U;
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& A) {
    SmithForm sf = smith_normal_form(A);
    const std::size_t n = A.cols();
    if (sf.rank == n) return {};
    // A (V e_j) = U^{-1} (D e_j) = 0 exactly when column j of D vanishes.
    IntMat K(n - sf.rank, n);
    for (std::size_t j = sf.rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            K.at(j - sf.rank, i) = sf.V.at(i, j);
    K = hnf_rows(std::move(K));
    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t i = 0; i < K.rows(); ++i) {
        std::vector<mpz_class> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = K.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMat hnf_rows(IntMat M) {
    const std::size_t m = M.rows(), n = M.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // Gcd-reduce column c among rows >= r until one nonzero entry remains.
        for (;;) {
            std::size_t p = m;
            for (std::size_t i = r; i < m; ++i) {
                if (M.at(i, c) == 0) continue;
                if (p == m || mpz_cmpabs(M.at(i, c).get_mpz_t(),
                                         M.at(p, c).get_mpz_t()) < 0)
                    p = i;
            }
            if (p == m) break;  // column is zero below r
            swap_rows(M, r, p);
            bool more = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (M.at(i, c) == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), M.at(i, c).get_mpz_t(),
                           M.at(r, c).get_mpz_t());
                addmul_row(M, i, f, r);
                if (M.at(i, c) != 0) more = true;
            }
            if (!more) break;
        }
        if (M.at(r, c) == 0) continue;
        if (M.at(r, c) < 0) negate_row(M, r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class f;
            mpz_fdiv_q(f.get_mpz_t(), M.at(i, c).get_mpz_t(),
                       M.at(r, c).get_mpz_t());
            addmul_row(M, i, f, r);
        }
        ++r;
    }
    IntMat out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = M.at(i, j);
    return out;
}

} // namespace qnichols
