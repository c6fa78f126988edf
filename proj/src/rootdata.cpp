/**
 * @file rootdata.cpp
 * @brief Root datum construction, sub-root datum validation, lattice maps,
 *        and JSON file I/O.
 */
#include "qnichols/rootdata.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qnichols {

RootDatum::RootDatum(std::vector<std::string> names, IntMat dot,
                     std::size_t rank_y, std::size_t rank_x, IntMat pairing,
                     IntMat i1, IntMat i2)
    : names_(std::move(names)),
      dot_(std::move(dot)),
      pairing_(std::move(pairing)),
      i1_(std::move(i1)),
      i2_(std::move(i2)) {
    const std::size_t n = names_.size();
    if (rank_y == 0 || rank_x == 0)
        throw InputError("lattice ranks must be positive");
    if (dot_.rows() != n || dot_.cols() != n)
        throw InputError("dot matrix must be " + std::to_string(n) + "x" +
                         std::to_string(n));
    if (pairing_.rows() != rank_y || pairing_.cols() != rank_x)
        throw InputError("pairing matrix must be rankY x rankX");
    if (i1_.rows() != rank_y || i1_.cols() != n)
        throw InputError("i1 must provide a vector of length rankY per index");
    if (i2_.rows() != rank_x || i2_.cols() != n)
        throw InputError("i2 must provide a vector of length rankX per index");
    for (std::size_t i = 0; i < n; ++i) {
        if (names_[i].empty()) throw InputError("index names must be nonempty");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[i] == names_[j])
                throw InputError("duplicate index name '" + names_[i] + "'");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class& dii = dot_.at(i, i);
        if (dii <= 0 || dii % 2 != 0)
            throw InputError("dot(" + names_[i] + "," + names_[i] +
                             ") = " + dii.get_str() +
                             " must be a positive even integer");
        for (std::size_t j = 0; j < n; ++j) {
            if (dot_.at(i, j) != dot_.at(j, i))
                throw InputError("dot matrix is not symmetric at (" +
                                 names_[i] + "," + names_[j] + ")");
            if (i == j) continue;
            mpz_class num = 2 * dot_.at(i, j);
            if (num % dii != 0)
                throw InputError("Cartan entry 2*dot(" + names_[i] + "," +
                                 names_[j] + ")/dot(" + names_[i] + "," +
                                 names_[i] + ") is not an integer");
            if (num > 0)
                throw InputError("Cartan entry C[" + names_[i] + "][" +
                                 names_[j] + "] must be <= 0");
        }
    }

    // Perfect pairing: Smith form of P has square shape and all elementary
    // divisors 1 (equivalently |det P| = 1 when square).
    if (rank_y != rank_x || !is_unimodular(pairing_))
        throw InputError("pairing matrix is not perfect: " + pairing_.str());

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (pair(i1_col(i), i2_col(j)) != cartan(i, j))
                throw InputError("<i1(" + names_[i] + "), i2(" + names_[j] +
                                 ")> != C[" + names_[i] + "][" + names_[j] +
                                 "]");
}

long RootDatum::dot_val(std::size_t i, std::size_t j) const {
    return static_cast<long>(dot_.at(i, j).get_si());
}

long RootDatum::cartan(std::size_t i, std::size_t j) const {
    mpz_class v = 2 * dot_.at(i, j) / dot_.at(i, i);
    return static_cast<long>(v.get_si());
}

Vec RootDatum::i1_col(std::size_t i) const {
    Vec v(rank_y());
    for (std::size_t r = 0; r < rank_y(); ++r) v[r] = i1_.at(r, i);
    return v;
}

Vec RootDatum::i2_col(std::size_t i) const {
    Vec v(rank_x());
    for (std::size_t r = 0; r < rank_x(); ++r) v[r] = i2_.at(r, i);
    return v;
}

mpz_class RootDatum::pair(const Vec& y, const Vec& x) const {
    if (y.size() != rank_y() || x.size() != rank_x())
        throw InputError("pairing applied to vectors of wrong rank");
    mpz_class s = 0;
    for (std::size_t a = 0; a < rank_y(); ++a) {
        if (y[a] == 0) continue;
        for (std::size_t b = 0; b < rank_x(); ++b)
            s += y[a] * pairing_.at(a, b) * x[b];
    }
    return s;
}

bool RootDatum::is_y_regular() const { return int_rank(i1_) == size(); }

bool RootDatum::operator==(const RootDatum& other) const {
    return names_ == other.names_ && dot_ == other.dot_ &&
           pairing_ == other.pairing_ && i1_ == other.i1_ && i2_ == other.i2_;
}

RootDatum builtin_datum(const std::string& type, std::size_t n) {
    if (type != "A" || n < 1)
        throw InputError("unsupported built-in datum type '" + type + "' rank " +
                         std::to_string(n));
    std::vector<std::string> names;
    IntMat dot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i + 1));
        dot.at(i, i) = 2;
        if (i + 1 < n) {
            dot.at(i, i + 1) = -1;
            dot.at(i + 1, i) = -1;
        }
    }
    // Simply connected: Y = X = Z^n, <,> the standard pairing, i1(i) = e_i,
    // so i2(j) must be the j-th column of the Cartan matrix.
    return RootDatum(names, dot, n, n, IntMat::identity(n),
                     IntMat::identity(n), dot);
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
    const std::size_t n = a.size() + b.size();
    const std::size_t ry = a.rank_y() + b.rank_y();
    const std::size_t rx = a.rank_x() + b.rank_x();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));

    auto block2 = [](const IntMat& p, const IntMat& q) {
        IntMat m(p.rows() + q.rows(), p.cols() + q.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) m.at(i, j) = p.at(i, j);
        for (std::size_t i = 0; i < q.rows(); ++i)
            for (std::size_t j = 0; j < q.cols(); ++j)
                m.at(p.rows() + i, p.cols() + j) = q.at(i, j);
        return m;
    };
    return RootDatum(names, block2(a.dot(), b.dot()), ry, rx,
                     block2(a.pairing(), b.pairing()), block2(a.i1(), b.i1()),
                     block2(a.i2(), b.i2()));
}

bool ValidationReport::all_ok() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionResult& c) { return c.ok; });
}

const ConditionResult& ValidationReport::find(const std::string& id) const {
    for (const auto& c : conditions)
        if (c.id == id) return c;
    throw InputError("no condition with id '" + id + "'");
}

SubRootDatum::SubRootDatum(RootDatum ambient, RootDatum sub,
                           std::vector<std::size_t> iota, IntMat s_y,
                           IntMat s_x, std::optional<IntMat> xpp)
    : ambient_(std::move(ambient)),
      sub_(std::move(sub)),
      iota_(std::move(iota)),
      s_y_(std::move(s_y)),
      s_x_(std::move(s_x)) {
    if (iota_.size() != sub_.size())
        throw InputError("iota must assign an ambient index to every sub index");
    for (std::size_t j : iota_)
        if (j >= ambient_.size())
            throw InputError("iota value out of range of the ambient index set");
    if (s_y_.rows() != ambient_.rank_y() || s_y_.cols() != sub_.rank_y())
        throw InputError("sY must be rankY x rankY'");
    if (s_x_.rows() != ambient_.rank_x() || s_x_.cols() != sub_.rank_x())
        throw InputError("sX must be rankX x rankX'");

    if (xpp.has_value()) {
        xpp_ = std::move(*xpp);
        if (xpp_.rows() != ambient_.rank_x())
            throw InputError("Xpp vectors must have length rankX");
    } else {
        // The only possible complement: the integer kernel of sY^T P.
        auto basis = integer_kernel_basis(s_y_.transposed() * ambient_.pairing());
        xpp_ = IntMat(ambient_.rank_x(), basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (std::size_t r = 0; r < ambient_.rank_x(); ++r)
                xpp_.at(r, k) = basis[k][r];
    }

    pre_.assign(ambient_.size(), npos);
    for (std::size_t j = 0; j < iota_.size(); ++j) {
        // Duplicate iota values are a condition-(i) failure, not an input
        // error; keep the first preimage for lookup purposes.
        if (pre_[iota_[j]] == npos) pre_[iota_[j]] = j;
    }
    for (std::size_t i = 0; i < ambient_.size(); ++i)
        if (pre_[i] == npos) comp_.push_back(i);

    // The splitting matrix [sX | Xpp]; rho exists when it is unimodular.
    if (sub_.rank_x() + xpp_.cols() == ambient_.rank_x()) {
        IntMat m(ambient_.rank_x(), ambient_.rank_x());
        for (std::size_t r = 0; r < ambient_.rank_x(); ++r) {
            for (std::size_t c = 0; c < sub_.rank_x(); ++c)
                m.at(r, c) = s_x_.at(r, c);
            for (std::size_t c = 0; c < xpp_.cols(); ++c)
                m.at(r, sub_.rank_x() + c) = xpp_.at(r, c);
        }
        if (is_unimodular(m)) split_inv_ = inverse_unimodular(m);
    }
}

std::size_t SubRootDatum::iota_preimage(std::size_t i) const {
    if (i >= pre_.size() || pre_[i] == npos)
        throw InputError("ambient index " + std::to_string(i + 1) +
                         " is not in the image of iota");
    return pre_[i];
}

namespace {

/// "injective with free cokernel" for a lattice map, with witness text.
ConditionResult check_saturated_embedding(const IntMat& m, const std::string& what) {
    SmithForm sf = smith_normal_form(m);
    if (sf.rank < m.cols())
        return {"", false,
                what + " is not injective (rank " + std::to_string(sf.rank) +
                    " < " + std::to_string(m.cols()) + ")"};
    for (const auto& d : sf.divisors)
        if (d != 1)
            return {"", false,
                    what + " has elementary divisor " + d.get_str() +
                        ", so the quotient lattice has torsion"};
    return {"", true, ""};
}

} // namespace

ValidationReport SubRootDatum::validate() const {
    ValidationReport rep;

    // (i) iota injective.
    {
        ConditionResult r{"i", true, ""};
        for (std::size_t a = 0; a < iota_.size() && r.ok; ++a)
            for (std::size_t b = a + 1; b < iota_.size(); ++b)
                if (iota_[a] == iota_[b]) {
                    r.ok = false;
                    r.detail = "iota maps sub indices " + std::to_string(a + 1) +
                               " and " + std::to_string(b + 1) +
                               " to the same ambient index " +
                               ambient_.name(iota_[a]);
                    break;
                }
        rep.conditions.push_back(std::move(r));
    }

    // (ii) dot form restricts.
    {
        ConditionResult r{"ii", true, ""};
        for (std::size_t a = 0; a < sub_.size() && r.ok; ++a)
            for (std::size_t b = 0; b < sub_.size(); ++b)
                if (sub_.dot().at(a, b) != ambient_.dot().at(iota_[a], iota_[b])) {
                    r.ok = false;
                    r.detail = "dot'(" + sub_.name(a) + "," + sub_.name(b) +
                               ") = " + sub_.dot().at(a, b).get_str() +
                               " but ambient dot(" + ambient_.name(iota_[a]) +
                               "," + ambient_.name(iota_[b]) + ") = " +
                               ambient_.dot().at(iota_[a], iota_[b]).get_str();
                    break;
                }
        rep.conditions.push_back(std::move(r));
    }

    // (iii) sY, sX injective with free quotients.
    {
        ConditionResult r = check_saturated_embedding(s_y_, "sY");
        if (r.ok) r = check_saturated_embedding(s_x_, "sX");
        r.id = "iii";
        rep.conditions.push_back(std::move(r));
    }

    // (iv) pairing restricts: sY^T P sX = P'.
    {
        ConditionResult r{"iv", true, ""};
        IntMat lhs = s_y_.transposed() * ambient_.pairing() * s_x_;
        if (lhs != sub_.pairing()) {
            r.ok = false;
            r.detail = "sY^T P sX = " + lhs.str() + " differs from P' = " +
                       sub_.pairing().str();
        }
        rep.conditions.push_back(std::move(r));
    }

    // (v) X = X' (+) X'' and <sY(Y'), X''> = 0.
    {
        ConditionResult r{"v", true, ""};
        if (sub_.rank_x() + xpp_.cols() != ambient_.rank_x()) {
            r.ok = false;
            r.detail = "rankX' + dim X'' = " +
                       std::to_string(sub_.rank_x() + xpp_.cols()) +
                       " != rankX = " + std::to_string(ambient_.rank_x());
        } else if (!split_inv_.has_value()) {
            r.ok = false;
            r.detail = "[sX | Xpp] is not unimodular, so sX(X') + X'' is a "
                       "proper sublattice of X";
        } else {
            IntMat orth = s_y_.transposed() * ambient_.pairing() * xpp_;
            if (!orth.is_zero()) {
                r.ok = false;
                r.detail = "<sY(Y'), X''> != 0: sY^T P Xpp = " + orth.str();
            }
        }
        rep.conditions.push_back(std::move(r));
    }

    // (vi) the embeddings intertwine i1 and i2.
    {
        ConditionResult r{"vi", true, ""};
        for (std::size_t j = 0; j < sub_.size() && r.ok; ++j) {
            Vec y = s_y_.apply(sub_.i1_col(j));
            Vec x = s_x_.apply(sub_.i2_col(j));
            if (y != ambient_.i1_col(iota_[j])) {
                r.ok = false;
                r.detail = "sY(i1'(" + sub_.name(j) + ")) != i1(" +
                           ambient_.name(iota_[j]) + ")";
            } else if (x != ambient_.i2_col(iota_[j])) {
                r.ok = false;
                r.detail = "sX(i2'(" + sub_.name(j) + ")) != i2(" +
                           ambient_.name(iota_[j]) + ")";
            }
        }
        rep.conditions.push_back(std::move(r));
    }

    return rep;
}

void SubRootDatum::require_valid() const {
    ValidationReport rep = validate();
    for (const auto& c : rep.conditions)
        if (!c.ok)
            throw InputError("sub-root datum condition (" + c.id +
                             ") fails: " + c.detail);
}

Vec SubRootDatum::restrict_weight(const Vec& lambda) const {
    if (!split_inv_.has_value())
        throw InputError(
            "restriction map undefined: X does not split as sX(X') (+) X''");
    if (lambda.size() != ambient_.rank_x())
        throw InputError("restriction applied to vector of wrong rank");
    Vec coords = split_inv_->apply(lambda);
    return Vec(coords.begin(), coords.begin() + sub_.rank_x());
}

unsigned SubRootDatum::chi_word(const std::vector<std::size_t>& word) const {
    unsigned n = 0;
    for (std::size_t i : word) {
        if (i >= ambient_.size())
            throw InputError("word letter out of range of the index set");
        if (!in_iota_image(i)) ++n;
    }
    return n;
}

mpz_class SubRootDatum::chi_multideg(const Vec& multideg) const {
    if (multideg.size() != ambient_.size())
        throw InputError("multidegree has wrong length");
    mpz_class n = 0;
    for (std::size_t d : comp_) n += multideg[d];
    return n;
}

SubRootDatum levi_subdatum(const RootDatum& t,
                           const std::vector<std::size_t>& subset) {
    const std::size_t m = subset.size();
    std::vector<std::string> names;
    IntMat dot(m, m), i1(t.rank_y(), m), i2(t.rank_x(), m);
    for (std::size_t a = 0; a < m; ++a) {
        if (subset[a] >= t.size())
            throw InputError("subset index out of range");
        names.push_back(t.name(subset[a]));
        for (std::size_t b = 0; b < m; ++b)
            dot.at(a, b) = t.dot().at(subset[a], subset[b]);
        for (std::size_t r = 0; r < t.rank_y(); ++r)
            i1.at(r, a) = t.i1().at(r, subset[a]);
        for (std::size_t r = 0; r < t.rank_x(); ++r)
            i2.at(r, a) = t.i2().at(r, subset[a]);
    }
    RootDatum sub(names, dot, t.rank_y(), t.rank_x(), t.pairing(), i1, i2);
    return SubRootDatum(t, sub, subset, IntMat::identity(t.rank_y()),
                        IntMat::identity(t.rank_x()));
}

SubRootDatum left_summand_subdatum(const RootDatum& t, const RootDatum& j) {
    RootDatum amb = direct_sum(t, j);
    std::vector<std::size_t> iota;
    for (std::size_t i = 0; i < t.size(); ++i) iota.push_back(i);
    IntMat sy(amb.rank_y(), t.rank_y()), sx(amb.rank_x(), t.rank_x());
    for (std::size_t c = 0; c < t.rank_y(); ++c) sy.at(c, c) = 1;
    for (std::size_t c = 0; c < t.rank_x(); ++c) sx.at(c, c) = 1;
    // Rename the sub copy to match the ambient convention of fresh labels.
    return SubRootDatum(amb, t, iota, sy, sx);
}

bool is_dominant(const RootDatum& d, const Vec& lambda,
                 const std::vector<std::size_t>& S) {
    if (lambda.size() != d.rank_x())
        throw InputError("weight vector has wrong rank");
    IntMat m(d.rank_y(), S.size());
    for (std::size_t k = 0; k < S.size(); ++k) {
        if (S[k] >= d.size()) throw InputError("dominance index out of range");
        for (std::size_t r = 0; r < d.rank_y(); ++r)
            m.at(r, k) = d.i1().at(r, S[k]);
    }
    if (int_rank(m) < S.size())
        throw InputError(
            "dominance undefined: {i1(s) : s in S} is linearly dependent");
    for (std::size_t k = 0; k < S.size(); ++k)
        if (d.pair(d.i1_col(S[k]), lambda) < 0) return false;
    return true;
}

Vec weight_in_x(const RootDatum& d, const Vec& w) {
    if (w.size() != d.size())
        throw InputError("Z[I]-vector has wrong length");
    return d.i2().apply(w);
}

// ---------------------------------------------------------------------------
// JSON file I/O
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void reject_unknown_fields(const json& j, const std::vector<std::string>& allowed,
                           const std::string& path) {
    if (!j.is_object()) throw InputError(path + ": top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw InputError(path + ": unknown field '" + it.key() + "'");
    for (const auto& f : allowed)
        if (f != "Xpp" && !j.contains(f))
            throw InputError(path + ": missing field '" + f + "'");
}

mpz_class int_from_json(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw InputError(where + ": expected an integer");
    return mpz_class(v.get<long>());
}

/// Matrix given as an array of `rows` rows, each of length `cols`.
IntMat matrix_from_json(const json& v, std::size_t rows, std::size_t cols,
                        const std::string& where) {
    if (!v.is_array() || v.size() != rows)
        throw InputError(where + ": expected " + std::to_string(rows) +
                         " rows");
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            throw InputError(where + ": row " + std::to_string(i + 1) +
                             " must have " + std::to_string(cols) +
                             " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = int_from_json(v[i][j], where);
    }
    return m;
}

/// i1/i2/Xpp style data: one vector per item, stored as matrix columns.
IntMat columns_from_json(const json& v, std::size_t dim, std::size_t count,
                         bool count_free, const std::string& where) {
    if (!v.is_array() || (!count_free && v.size() != count))
        throw InputError(where + ": expected " + std::to_string(count) +
                         " vectors");
    IntMat m(dim, v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_array() || v[k].size() != dim)
            throw InputError(where + ": vector " + std::to_string(k + 1) +
                             " must have length " + std::to_string(dim));
        for (std::size_t r = 0; r < dim; ++r)
            m.at(r, k) = int_from_json(v[k][r], where);
    }
    return m;
}

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

json columns_to_json(const IntMat& m) {
    json cols = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
        json col = json::array();
        for (std::size_t r = 0; r < m.rows(); ++r)
            col.push_back(m.at(r, k).get_si());
        cols.push_back(std::move(col));
    }
    return cols;
}

RootDatum root_datum_from_json(const json& j, const std::string& path) {
    reject_unknown_fields(j, {"I", "dot", "rankY", "rankX", "pairing", "i1", "i2"},
                          path);
    if (!j["I"].is_array())
        throw InputError(path + ": field 'I' must be a list of names");
    std::vector<std::string> names;
    for (const auto& v : j["I"]) {
        if (!v.is_string())
            throw InputError(path + ": index names must be strings");
        names.push_back(v.get<std::string>());
    }
    const std::size_t n = names.size();
    mpz_class ry = int_from_json(j["rankY"], path + ": rankY");
    mpz_class rx = int_from_json(j["rankX"], path + ": rankX");
    if (ry <= 0 || rx <= 0)
        throw InputError(path + ": rankY and rankX must be positive");
    const auto rank_y = static_cast<std::size_t>(ry.get_ui());
    const auto rank_x = static_cast<std::size_t>(rx.get_ui());
    return RootDatum(
        names, matrix_from_json(j["dot"], n, n, path + ": dot"), rank_y, rank_x,
        matrix_from_json(j["pairing"], rank_y, rank_x, path + ": pairing"),
        columns_from_json(j["i1"], rank_y, n, false, path + ": i1"),
        columns_from_json(j["i2"], rank_x, n, false, path + ": i2"));
}

} // namespace

RootDatum load_root_datum(const std::string& path) {
    return root_datum_from_json(parse_file(path), path);
}

SubRootDatum load_sub_root_datum(const std::string& path) {
    json j = parse_file(path);
    reject_unknown_fields(j, {"ambient", "sub", "iota", "sY", "sX", "Xpp"}, path);
    if (!j["ambient"].is_string() || !j["sub"].is_string())
        throw InputError(path + ": 'ambient' and 'sub' must be file paths");
    std::filesystem::path base = std::filesystem::path(path).parent_path();
    RootDatum ambient =
        load_root_datum((base / j["ambient"].get<std::string>()).string());
    RootDatum sub = load_root_datum((base / j["sub"].get<std::string>()).string());

    if (!j["iota"].is_array() || j["iota"].size() != sub.size())
        throw InputError(path + ": iota must list one ambient position per "
                         "sub index");
    std::vector<std::size_t> iota;
    for (const auto& v : j["iota"]) {
        mpz_class p = int_from_json(v, path + ": iota");
        if (p < 1 || p > static_cast<long>(ambient.size()))
            throw InputError(path + ": iota positions are 1-based indices "
                             "into the ambient I");
        iota.push_back(static_cast<std::size_t>(p.get_ui()) - 1);
    }
    IntMat sy = matrix_from_json(j["sY"], ambient.rank_y(), sub.rank_y(),
                                 path + ": sY");
    IntMat sx = matrix_from_json(j["sX"], ambient.rank_x(), sub.rank_x(),
                                 path + ": sX");
    std::optional<IntMat> xpp;
    if (j.contains("Xpp"))
        xpp = columns_from_json(j["Xpp"], ambient.rank_x(), 0, true,
                                path + ": Xpp");
    return SubRootDatum(std::move(ambient), std::move(sub), std::move(iota),
                        std::move(sy), std::move(sx), std::move(xpp));
}

void save_root_datum(const RootDatum& d, const std::string& path) {
    ordered_json j;
    j["I"] = d.names();
    j["dot"] = matrix_to_json(d.dot());
    j["rankY"] = d.rank_y();
    j["rankX"] = d.rank_x();
    j["pairing"] = matrix_to_json(d.pairing());
    j["i1"] = columns_to_json(d.i1());
    j["i2"] = columns_to_json(d.i2());
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

void save_sub_root_datum(const SubRootDatum& s, const std::string& path,
                         const std::string& ambient_path,
                         const std::string& sub_path) {
    ordered_json j;
    j["ambient"] = ambient_path;
    j["sub"] = sub_path;
    json iota = json::array();
    for (std::size_t v : s.iota()) iota.push_back(v + 1);
    j["iota"] = iota;
    j["sY"] = matrix_to_json(s.s_y());
    j["sX"] = matrix_to_json(s.s_x());
    if (s.xpp().cols() > 0) j["Xpp"] = columns_to_json(s.xpp());
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace qnichols
