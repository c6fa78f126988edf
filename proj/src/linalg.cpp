#include "qnichols/linalg.hpp"

#include "qnichols/errors.hpp"

namespace qnichols {

namespace {

std::size_t col_count(const RatMat& a) { return a.empty() ? 0 : a[0].size(); }

void check_rect(const RatMat& a, const char* who) {
    for (const auto& row : a)
        if (row.size() != col_count(a))
            throw InputError(std::string(who) + ": ragged matrix");
}

} // namespace

RatMat rat_identity(std::size_t n) {
    RatMat m(n, std::vector<RatQ>(n, RatQ()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RatQ(1);
    return m;
}

RatMat rat_zeros(std::size_t rows, std::size_t cols) {
    return RatMat(rows, std::vector<RatQ>(cols, RatQ()));
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    check_rect(a, "rat_mul");
    check_rect(b, "rat_mul");
    if (col_count(a) != b.size()) throw InputError("rat_mul: shape mismatch");
    RatMat out = rat_zeros(a.size(), col_count(b));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < col_count(b); ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

RatMat rat_add(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size() || col_count(a) != col_count(b))
        throw InputError("rat_add: shape mismatch");
    RatMat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < col_count(a); ++j) out[i][j] += b[i][j];
    return out;
}

RatMat rat_sub(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size() || col_count(a) != col_count(b))
        throw InputError("rat_sub: shape mismatch");
    RatMat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < col_count(a); ++j) out[i][j] -= b[i][j];
    return out;
}

RatMat rat_scale(const RatMat& a, const RatQ& c) {
    RatMat out = a;
    for (auto& row : out)
        for (auto& v : row) v *= c;
    return out;
}

RatMat rat_kron(const RatMat& a, const RatMat& b) {
    const std::size_t ra = a.size(), ca = col_count(a);
    const std::size_t rb = b.size(), cb = col_count(b);
    RatMat out = rat_zeros(ra * rb, ca * cb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
        }
    return out;
}

bool rat_is_zero(const RatMat& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

std::vector<std::size_t> rat_rref(RatMat& a) {
    check_rect(a, "rat_rref");
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size(), cols = col_count(a);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(a[r], a[sel]);
        const RatQ inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RatQ f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rat_rank(RatMat a) { return rat_rref(a).size(); }

RatQ rat_det(RatMat a) {
    check_rect(a, "rat_det");
    if (a.size() != col_count(a)) throw InputError("rat_det: not square");
    const std::size_t n = a.size();
    RatQ det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a[i][c].is_zero()) { sel = i; break; }
        if (sel == n) return RatQ();
        if (sel != c) { std::swap(a[sel], a[c]); det = -det; }
        det *= a[c][c];
        const RatQ inv = a[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            const RatQ f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

std::vector<std::vector<RatQ>> rat_kernel(const RatMat& a) {
    RatMat m = a;
    const std::size_t cols = col_count(a);
    const std::vector<std::size_t> pivots = rat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<RatQ>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatQ> x(cols, RatQ());
        x[f] = RatQ(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace qnichols
