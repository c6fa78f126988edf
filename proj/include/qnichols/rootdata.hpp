/**
 * @file rootdata.hpp
 * @brief Root data, sub-root data, and the lattice maps they induce.
 *
 * A root datum is a tuple (I, ·, Y, X, <,>, i1, i2): a finite ordered index
 * set I, a symmetric Z-valued form · on Z[I] with i·i in 2Z_{>0}, free
 * lattices Y = Z^rankY and X = Z^rankX with a perfect pairing <,>, and
 * embeddings i1: I -> Y, i2: I -> X satisfying <i1(i), i2(j)> = C[i][j]
 * where C[i][j] = 2(i·j)/(i·i) is the Cartan matrix.
 *
 * A sub-root datum is a second datum (J, ...) together with an injection
 * iota: J -> I and lattice maps sY: Y' -> Y, sX: X' -> X subject to six
 * compatibility conditions (validate() reports each one):
 *   (i)   iota is injective;
 *   (ii)  the dot form of J is the restriction of the dot form of I;
 *   (iii) sY and sX are injective with free cokernels;
 *   (iv)  <sY(y'), sX(x')> = <y', x'>';
 *   (v)   X = sX(X') (+) X'' with <sY(Y'), X''> = 0 for the stored
 *         complement X'';
 *   (vi)  sY o i1' = i1 o iota and sX o i2' = i2 o iota.
 *
 * The fixed splitting X = X' (+) X'' yields the restriction map
 * rho: X -> X'.  The complement X'' is uniquely determined when it exists
 * (it must equal the integer kernel of sY^T P), and is computed by Smith
 * normal form when not supplied.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qnichols/intmat.hpp"

namespace qnichols {

/// Lattice vectors and Z[I]-vectors.
using Vec = std::vector<mpz_class>;

class RootDatum {
public:
    /**
     * @param names   labels of the index set I, in order
     * @param dot     |I| x |I| symmetric matrix of the form ·
     * @param rank_y  rank of the cocharacter lattice Y
     * @param rank_x  rank of the character lattice X
     * @param pairing rank_y x rank_x matrix P of <,>, <y,x> = y^T P x
     * @param i1      rank_y x |I| matrix; column i is i1(i)
     * @param i2      rank_x x |I| matrix; column i is i2(i)
     *
     * Throws InputError when any structural invariant fails: shape
     * mismatches, non-symmetric dot, odd or non-positive i·i, non-integral
     * or positive off-diagonal Cartan entries, non-perfect pairing, or
     * <i1(i), i2(j)> != C[i][j].
     */
    RootDatum(std::vector<std::string> names, IntMat dot, std::size_t rank_y,
              std::size_t rank_x, IntMat pairing, IntMat i1, IntMat i2);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::size_t rank_y() const { return pairing_.rows(); }
    std::size_t rank_x() const { return pairing_.cols(); }

    const IntMat& dot() const { return dot_; }
    const IntMat& pairing() const { return pairing_; }
    const IntMat& i1() const { return i1_; }
    const IntMat& i2() const { return i2_; }

    long dot_val(std::size_t i, std::size_t j) const;
    /// Cartan matrix entry C[i][j] = 2 dot(i,j) / dot(i,i).
    long cartan(std::size_t i, std::size_t j) const;
    /// c_i = dot(i,i)/2, the length scaling with q_i = q^{c_i}.
    long c(std::size_t i) const { return dot_val(i, i) / 2; }

    Vec i1_col(std::size_t i) const;
    Vec i2_col(std::size_t i) const;

    /// <y, x> = y^T P x.
    mpz_class pair(const Vec& y, const Vec& x) const;

    /// Whether {i1(i) : i in I} is linearly independent in Y.
    bool is_y_regular() const;

    bool operator==(const RootDatum& other) const;
    bool operator!=(const RootDatum& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
    IntMat dot_, pairing_, i1_, i2_;
};

/// Built-in data by Cartan type; currently "A" (simply connected type A_n).
RootDatum builtin_datum(const std::string& type, std::size_t n);

/// Block-diagonal direct sum; indices renamed "1".."n".
RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

/// One of the six embedding conditions, with a witness when it fails.
struct ConditionResult {
    std::string id;      ///< "i" .. "vi"
    bool ok = false;
    std::string detail;  ///< human-readable witness when !ok, else empty
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;  ///< always six, in order
    bool all_ok() const;
    const ConditionResult& find(const std::string& id) const;
};

class SubRootDatum {
public:
    /**
     * @param ambient the datum (I, ..., Y, X, ...)
     * @param sub     the datum (J, ..., Y', X', ...)
     * @param iota    0-based ambient index for each sub index
     * @param s_y     rank_y x rank_y' matrix of sY
     * @param s_x     rank_x x rank_x' matrix of sX
     * @param xpp     optional complement basis: rank_x x k matrix whose
     *                columns span X''.  Defaults to the integer kernel of
     *                sY^T P, the unique candidate complement.
     *
     * Throws InputError on dimension mismatches (matrix shapes, iota range).
     * Mathematical failures of the six conditions are reported by
     * validate(), not thrown here.
     */
    SubRootDatum(RootDatum ambient, RootDatum sub, std::vector<std::size_t> iota,
                 IntMat s_y, IntMat s_x,
                 std::optional<IntMat> xpp = std::nullopt);

    const RootDatum& ambient() const { return ambient_; }
    const RootDatum& sub() const { return sub_; }
    const std::vector<std::size_t>& iota() const { return iota_; }
    const IntMat& s_y() const { return s_y_; }
    const IntMat& s_x() const { return s_x_; }
    const IntMat& xpp() const { return xpp_; }

    /// Evaluate the six embedding conditions.
    ValidationReport validate() const;
    /// Throw InputError naming the first failed condition, if any.
    void require_valid() const;

    /// D = I \ iota(J), ascending 0-based ambient indices.
    const std::vector<std::size_t>& complement() const { return comp_; }
    bool in_iota_image(std::size_t i) const { return pre_[i] != npos; }
    /// For i in iota(J), the j with iota(j) = i.
    std::size_t iota_preimage(std::size_t i) const;

    /**
     * The restriction rho: X -> X' through the splitting X = X' (+) X''.
     * Requires [sX | Xpp] unimodular (condition v); throws InputError
     * otherwise.
     */
    Vec restrict_weight(const Vec& lambda) const;

    /// Count of letters of the word lying in D (the chi_D grading).
    unsigned chi_word(const std::vector<std::size_t>& word) const;
    /// Sum of multideg[d] over d in D.
    mpz_class chi_multideg(const Vec& multideg) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    RootDatum ambient_, sub_;
    std::vector<std::size_t> iota_;
    IntMat s_y_, s_x_, xpp_;
    std::vector<std::size_t> comp_;  ///< D, ascending
    std::vector<std::size_t> pre_;   ///< ambient index -> sub index or npos
    std::optional<IntMat> split_inv_;  ///< inverse of [sX | Xpp] if unimodular
};

/**
 * The parabolic-style sub-root datum on a subset J of I: the sub datum
 * keeps the full lattices Y, X and pairing, with i1' = i1 o iota,
 * i2' = i2 o iota, and sY = sX = id (so X'' = 0).
 */
SubRootDatum levi_subdatum(const RootDatum& t,
                           const std::vector<std::size_t>& subset);

/// Embed t into direct_sum(t, j) as the left summand; X'' = right block.
SubRootDatum left_summand_subdatum(const RootDatum& t, const RootDatum& j);

/**
 * S-dominance: <i1(s), lambda> >= 0 for every s in S (0-based indices).
 * Requires {i1(s) : s in S} linearly independent; throws InputError
 * otherwise.
 */
bool is_dominant(const RootDatum& d, const Vec& lambda,
                 const std::vector<std::size_t>& S);

/// i2 applied to a Z[I]-vector: sum_i w[i] * i2(i) in X.
Vec weight_in_x(const RootDatum& d, const Vec& w);

/**
 * File I/O.  A datum file is a JSON object with exactly the fields
 * `I` (list of names), `dot` (matrix), `rankY`, `rankX`, `pairing`
 * (rankY x rankX matrix), `i1`, `i2` (lists of vectors, one per index,
 * of lengths rankY / rankX).  A sub-datum file has exactly `ambient`,
 * `sub` (paths to datum files, resolved relative to the sub-datum file),
 * `iota` (1-based ambient positions), `sY`, `sX` (matrices), and
 * optionally `Xpp` (list of vectors of length rankX).  Unknown fields are
 * rejected.
 */
RootDatum load_root_datum(const std::string& path);
SubRootDatum load_sub_root_datum(const std::string& path);
void save_root_datum(const RootDatum& d, const std::string& path);
void save_sub_root_datum(const SubRootDatum& s, const std::string& path,
                         const std::string& ambient_path,
                         const std::string& sub_path);

} // namespace qnichols
